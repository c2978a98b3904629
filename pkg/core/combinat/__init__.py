"""
组合计算内核
精确的高斯有理数、Stirling/Lah 数、广义阶乘与广义 Stirling 数
"""
from .gauss_rational import GaussRational, gr
from .stirling import (
    StirlingKind,
    StirlingTable,
    stirling1,
    stirling2,
    lah,
    stirling_fault,
    register_dependent_cache,
    clear_dependent_caches,
)
from .factorial import genfact, rising, falling, gen_stirling

__all__ = [
    'GaussRational', 'gr',
    'StirlingKind', 'StirlingTable', 'stirling1', 'stirling2', 'lah',
    'stirling_fault', 'register_dependent_cache', 'clear_dependent_caches',
    'genfact', 'rising', 'falling', 'gen_stirling',
]
