"""
Stirling 数与 Lah 数

三角表按需增长并缓存；表对外表现为纯函数，读者可以并发访问。
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from enum import Enum
from typing import Callable, Dict, Iterator, List, Tuple

from core.errors import DomainError
from core.utils.logger import logger


class StirlingKind(Enum):
    """表的种类"""
    FIRST_SIGNED = "first-signed"   # s(n,k): (z)_n 中 z^k 的系数
    SECOND = "second"               # S(n,k): z^n 中 (z)_k 的系数
    LAH = "lah"                     # L(n,k): 无符号 Lah 数


def _next_row(kind: StirlingKind, prev: List[int], n: int) -> List[int]:
    """由第 n 行推出第 n+1 行"""
    row = [0] * (n + 2)
    for k in range(n + 2):
        left = prev[k - 1] if k >= 1 else 0
        here = prev[k] if k <= n else 0
        if kind is StirlingKind.SECOND:
            row[k] = left + k * here
        elif kind is StirlingKind.FIRST_SIGNED:
            row[k] = left - n * here
        else:
            # L(n+1,k) = (n+k) L(n,k) + L(n,k-1)，且 L(n,0)=0 (n≥1)
            row[k] = (left + (n + k) * here) if k >= 1 else 0
    return row


class StirlingTable:
    """
    三角整数表 table[n][k]

    增长时持锁，已生成的行不再修改；override 仅供故障注入使用。
    """

    def __init__(self, kind: StirlingKind):
        self.kind = kind
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()
        self._overrides: Dict[Tuple[int, int], int] = {}

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def _grow(self, n: int):
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows) - 1
                self._rows.append(_next_row(self.kind, self._rows[m], m))

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise DomainError(f"{self.kind.value}({n},{k}): 下标必须非负")
        if k > n:
            raise DomainError(f"{self.kind.value}({n},{k}): 要求 0 ≤ k ≤ n")
        if n > self.max_n:
            self._grow(n)
        if self._overrides:
            hit = self._overrides.get((n, k))
            if hit is not None:
                return hit
        return self._rows[n][k]

    def row(self, n: int) -> List[int]:
        return [self.get(n, k) for k in range(n + 1)]

    @contextmanager
    def override(self, n: int, k: int, value: int) -> Iterator[None]:
        """临时替换单个表项"""
        self._overrides[(n, k)] = value
        try:
            yield
        finally:
            self._overrides.pop((n, k), None)


STIRLING1 = StirlingTable(StirlingKind.FIRST_SIGNED)
STIRLING2 = StirlingTable(StirlingKind.SECOND)
LAH = StirlingTable(StirlingKind.LAH)

# 依赖 Stirling 表的下游缓存，故障注入前后统一清空
_dependent_caches: List[Callable[[], None]] = []


def register_dependent_cache(clear: Callable[[], None]):
    """登记一个下游缓存的清空函数"""
    _dependent_caches.append(clear)


def clear_dependent_caches():
    for clear in _dependent_caches:
        clear()


def stirling2(n: int, k: int) -> int:
    """第二类 Stirling 数 S(n,k)"""
    return STIRLING2.get(n, k)


def stirling1(n: int, k: int) -> int:
    """带符号第一类 Stirling 数 s(n,k)"""
    return STIRLING1.get(n, k)


def lah(n: int, k: int) -> int:
    """无符号 Lah 数 L(n,k) = C(n−1,k−1)·n!/k!"""
    if k == 0 and n >= 1:
        raise DomainError(f"lah({n},0): 要求 1 ≤ k ≤ n")
    return LAH.get(n, k)


@contextmanager
def stirling_fault(n: int = 5, k: int = 3, delta: int = 1) -> Iterator[None]:
    """
    故障注入：把 S(n,k) 临时加上 delta

    进入和退出时都清空下游缓存，避免污染后续计算。
    """
    original = STIRLING2.get(n, k)
    logger.warning(f"注入故障: S({n},{k}) = {original} → {original + delta}")
    clear_dependent_caches()
    try:
        with STIRLING2.override(n, k, original + delta):
            yield
    finally:
        clear_dependent_caches()
