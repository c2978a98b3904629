"""
校验登记表

每个检查是一个 (套件, 名称, 函数)；函数拿到 CheckContext 并返回若干 ReportRow。
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from core.combinat import GaussRational
from core.measures import QuadConfig
from core.verify.report import ReportRow

SUITES = ("exact", "numeric", "slow")


def derive_seed(seed: int, name: str) -> int:
    """由 (seed, 检查名) 派生子种子，与调度顺序无关"""
    digest = hashlib.sha256(f"{seed}:{name}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class CheckContext:
    seed: int
    rng: random.Random
    cfg: QuadConfig

    def gauss_rational(self, bound: int = 6, max_den: int = 4) -> GaussRational:
        """随机高斯有理数，分量为 p/q，|p| ≤ bound，1 ≤ q ≤ max_den"""
        rng = self.rng
        return GaussRational(
            Fraction(rng.randint(-bound, bound), rng.randint(1, max_den)),
            Fraction(rng.randint(-bound, bound), rng.randint(1, max_den)),
        )


CheckFunc = Callable[[CheckContext], List[ReportRow]]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    func: CheckFunc

    def context(self, seed: int, cfg: QuadConfig) -> CheckContext:
        sub = derive_seed(seed, self.name)
        return CheckContext(seed=sub, rng=random.Random(sub), cfg=cfg)


REGISTRY: Dict[str, Check] = {}


def check(suite: str, name: str) -> Callable[[CheckFunc], CheckFunc]:
    """登记检查的装饰器"""
    if suite not in SUITES:
        raise ValueError(f"未知的套件: {suite}")

    def decorator(func: CheckFunc) -> CheckFunc:
        if name in REGISTRY:
            raise ValueError(f"检查重复登记: {name}")
        REGISTRY[name] = Check(name, suite, func)
        return func

    return decorator


def checks_for(suite: str) -> List[Check]:
    """'all' = exact + numeric；结果按名称排序"""
    wanted = {"exact", "numeric"} if suite == "all" else {suite}
    if not wanted <= set(SUITES):
        raise ValueError(f"未知的套件: {suite}")
    return sorted((c for c in REGISTRY.values() if c.suite in wanted), key=lambda c: c.name)
