"""
应用配置

默认值可以被环境变量或项目根目录下的 .env 覆盖。
"""
import os
from pathlib import Path

from dotenv import load_dotenv

from core.measures import QuadConfig

# 项目根目录
ROOT_DIR = Path(__file__).parent.parent
DOCS_DIR = ROOT_DIR / "docs"
PARAMFILE_SCHEMA = DOCS_DIR / "paramfile.schema.json"

load_dotenv(ROOT_DIR / ".env")

# 默认参数文件；未设置时使用内置的 Laguerre(1,1,1)
PARAMS_FILE = os.getenv("SB_PARAMS_FILE") or None

# 日志
LOG_LEVEL = os.getenv("SB_LOG_LEVEL", "WARNING").upper()

# 校验套件
DEFAULT_SEED = int(os.getenv("SB_SEED", "20240917"))
WORKERS = int(os.getenv("SB_WORKERS", "4"))

# 求积默认值
REL_TOL = float(os.getenv("SB_REL_TOL", "1e-10"))
ABS_TOL = float(os.getenv("SB_ABS_TOL", "1e-14"))
MAX_NODES = int(os.getenv("SB_MAX_NODES", "4096"))

# 校验历史
HISTORY_DB = os.getenv("SB_HISTORY_DB", "verify_history.db")


def default_quad_config():
    """由环境变量构造 QuadConfig"""
    return QuadConfig(rel_tol=REL_TOL, abs_tol=ABS_TOL, max_nodes=MAX_NODES)
