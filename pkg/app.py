#!/usr/bin/env python3
"""
命令行入口

    python app.py poly -n 3
    python app.py verify --suite exact
"""
import sys

from backend.cli import main

if __name__ == "__main__":
    sys.exit(main())
