"""
广义阶乘与广义 Stirling 数
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Union

from core.combinat.gauss_rational import GaussRational, gr
from core.combinat.stirling import lah, register_dependent_cache
from core.errors import DomainError

Number = Union[GaussRational, int, complex, float]


def _one_like(z: Number) -> Number:
    return GaussRational.one() if isinstance(z, GaussRational) else 1


def genfact(z: Number, h: Number, n: int) -> Number:
    """
    广义阶乘 (z|h)_n = z(z−h)…(z−(n−1)h)，(z|h)_0 = 1

    z、h 同为 GaussRational 时结果精确；传入 complex 则按浮点计算。
    """
    if n < 0:
        raise DomainError(f"genfact: n={n} 必须非负")
    result = _one_like(z)
    for j in range(n):
        result = result * (z - h * j)
    return result


def rising(z: Number, n: int) -> Number:
    """上升阶乘 z^{(n)} = (z|−1)_n"""
    return genfact(z, -1, n)


def falling(z: Number, n: int) -> Number:
    """下降阶乘 (z)_n = (z|1)_n"""
    return genfact(z, 1, n)


@lru_cache(maxsize=4096)
def _gen_stirling_cached(n: int, k: int, h: GaussRational, r: GaussRational) -> GaussRational:
    if k == 0:
        return genfact(r, h, n)
    total = GaussRational.zero()
    for j in range(n - k + 1):
        total = total + comb(n, j) * (-h) ** (n - j - k) * lah(n - j, k) * genfact(r, h, j)
    return total


register_dependent_cache(_gen_stirling_cached.cache_clear)


def gen_stirling(n: int, k: int, h, r) -> GaussRational:
    """
    广义 Stirling 数 S(n,k;h,r)

    定义为 (z+r|h)_n 按 (z|−h)_k 展开的系数，用 Lah 数求和：
    S(n,k;h,r) = Σ_{j=0}^{n−k} C(n,j)(−h)^{n−j−k} L(n−j,k)(r|h)_j，k=0 时为 (r|h)_n。
    """
    if k < 0 or k > n:
        raise DomainError(f"gen_stirling({n},{k}): 要求 0 ≤ k ≤ n")
    return _gen_stirling_cached(n, k, gr(h), gr(r))
