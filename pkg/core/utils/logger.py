"""
日志工具
"""
import logging
import os

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(name: str = "sb", level: int | str | None = None) -> logging.Logger:
    """
    配置日志器

    输出到 stderr，stdout 只留给结果表格；重复调用不会叠加处理器。

    Args:
        name: 日志器名称
        level: 日志级别，缺省时读取 SB_LOG_LEVEL（默认 WARNING）
    """
    if level is None:
        level = os.getenv("SB_LOG_LEVEL", "WARNING").upper()
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not logger.handlers:
        # 控制台处理器（stderr）
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    for handler in logger.handlers:
        handler.setLevel(level)
    logger.propagate = False
    return logger


# 全局日志器
logger = setup_logger()
