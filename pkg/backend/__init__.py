"""
进程层
配置、参数文件、输出格式、API 与命令行
"""

__version__ = "1.0.0"
