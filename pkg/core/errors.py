"""
异常定义

所有库内错误都从 SBError 派生；CLI 根据类型映射退出码。
"""
from typing import Optional


class SBError(Exception):
    """库内错误基类"""


class DomainError(SBError, ValueError):
    """参数或自变量不在数学定义域内，消息中写明被违反的条件"""


class BasisMismatchError(DomainError):
    """算子收到了非自然基下的多项式"""


class ParseError(SBError, ValueError):
    """算子表达式语法错误"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ConvergenceError(SBError, RuntimeError):
    """求积或级数在节点/项数上限内达不到容差"""

    def __init__(self, message: str, best_estimate: Optional[complex] = None,
                 error_estimate: Optional[float] = None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class ParamFileError(SBError, ValueError):
    """参数文件格式或取值无效"""
