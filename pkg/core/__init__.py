"""
核心计算层
精确组合与多项式、Weyl 代数、测度、变换与校验套件；不依赖命令行
"""

__version__ = "1.0.0"
