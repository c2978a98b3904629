"""
精确多项式

系数为 GaussRational，基由 Basis 标签决定：单项式 z^n、下降 β 阶乘 (z|β)_n 或 Sheffer 多项式 s_n。
乘法、平移、差分等只在单项式基下定义。
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, List, Sequence, Union

from core.combinat import GaussRational, gr
from core.errors import BasisMismatchError


class Basis(Enum):
    MONOMIAL = "monomial"
    FALLING_BETA = "falling"
    SHEFFER = "sheffer"


@dataclass(frozen=True)
class ExactPoly:
    """coeffs[n] 是第 n 个基元素的系数；末项非零（零多项式为空元组）"""
    basis: Basis
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [gr(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # ==================== 构造 ====================

    @classmethod
    def zero(cls, basis: Basis = Basis.MONOMIAL) -> ExactPoly:
        return cls(basis, ())

    @classmethod
    def constant(cls, c, basis: Basis = Basis.MONOMIAL) -> ExactPoly:
        return cls(basis, (gr(c),))

    @classmethod
    def basis_element(cls, n: int, basis: Basis = Basis.MONOMIAL) -> ExactPoly:
        return cls(basis, (0,) * n + (1,))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, basis: Basis = Basis.MONOMIAL) -> ExactPoly:
        return cls(basis, tuple(coeffs))

    # ==================== 查询 ====================

    @property
    def degree(self) -> int:
        """零多项式返回 −1"""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> GaussRational:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return GaussRational.zero()

    def padded(self, length: int) -> List[GaussRational]:
        return [self.coefficient(n) for n in range(length)]

    # ==================== 线性运算 ====================

    def _check_same(self, other: ExactPoly):
        if other.basis is not self.basis:
            raise BasisMismatchError(f"基不一致: {self.basis.value} 与 {other.basis.value}")

    def __add__(self, other: ExactPoly) -> ExactPoly:
        self._check_same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(self.basis, tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __sub__(self, other: ExactPoly) -> ExactPoly:
        return self + other.scale(-1)

    def __neg__(self) -> ExactPoly:
        return self.scale(-1)

    def scale(self, c) -> ExactPoly:
        c = gr(c)
        return ExactPoly(self.basis, tuple(c * a for a in self.coeffs))

    def with_basis(self, basis: Basis) -> ExactPoly:
        """只换标签不换系数（用于 J: z^n ↦ s_n 这类按系数定义的映射）"""
        return ExactPoly(basis, self.coeffs)

    def to_dict(self) -> dict:
        return {'basis': self.basis.value, 'coeffs': [str(c) for c in self.coeffs]}

    def __str__(self):
        if self.is_zero:
            return "0"
        sym = {Basis.MONOMIAL: "z^{}", Basis.FALLING_BETA: "(z|β)_{}", Basis.SHEFFER: "s_{}"}[self.basis]
        parts = [f"({c})·{sym.format(n)}" for n, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(parts))


def require_basis(p: ExactPoly, basis: Basis, what: str = "运算"):
    if p.basis is not basis:
        raise BasisMismatchError(f"{what} 需要 {basis.value} 基，收到 {p.basis.value} 基")


# ==================== 单项式基运算 ====================

def poly_mul(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    require_basis(p, Basis.MONOMIAL, "乘法")
    require_basis(q, Basis.MONOMIAL, "乘法")
    if p.is_zero or q.is_zero:
        return ExactPoly.zero()
    out = [GaussRational.zero()] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return ExactPoly(Basis.MONOMIAL, tuple(out))


def mul_x(p: ExactPoly) -> ExactPoly:
    """Z：乘以自变量"""
    require_basis(p, Basis.MONOMIAL, "Z")
    if p.is_zero:
        return p
    return ExactPoly(Basis.MONOMIAL, (GaussRational.zero(),) + p.coeffs)


def derivative(p: ExactPoly) -> ExactPoly:
    require_basis(p, Basis.MONOMIAL, "D")
    return ExactPoly(Basis.MONOMIAL, tuple(n * c for n, c in enumerate(p.coeffs) if n >= 1))


def shift(p: ExactPoly, c) -> ExactPoly:
    """p(x + c)，按二项式展开精确代入"""
    require_basis(p, Basis.MONOMIAL, "平移")
    c = gr(c)
    if not c or p.is_zero:
        return p
    n = len(p.coeffs)
    powers = [GaussRational.one()]
    for _ in range(n):
        powers.append(powers[-1] * c)
    out = []
    for k in range(n):
        acc = GaussRational.zero()
        for m in range(k, n):
            if p.coeffs[m]:
                acc = acc + p.coeffs[m] * comb(m, k) * powers[m - k]
        out.append(acc)
    return ExactPoly(Basis.MONOMIAL, tuple(out))


def h_difference(p: ExactPoly, h) -> ExactPoly:
    """D_h p = (p(x+h) − p(x))/h；h=0 时即 D"""
    h = gr(h)
    if not h:
        return derivative(p)
    return (shift(p, h) - p).scale(GaussRational.one() / h)


def linear_factor_product(roots: Sequence) -> ExactPoly:
    """Π (x − r_j) 的单项式展开"""
    result = ExactPoly.constant(1)
    for r in roots:
        result = poly_mul(result, ExactPoly(Basis.MONOMIAL, (-gr(r), 1)))
    return result


def genfact_poly(c, h, n: int) -> ExactPoly:
    """(x + c | h)_n 的单项式展开"""
    c, h = gr(c), gr(h)
    return linear_factor_product([h * j - c for j in range(n)])


def evaluate(p: ExactPoly, z: Union[GaussRational, complex, float, int]):
    """
    单项式基下的 Horner 求值

    GaussRational 自变量给出精确值，其余按复浮点计算。
    """
    require_basis(p, Basis.MONOMIAL, "求值")
    if isinstance(z, GaussRational):
        acc = GaussRational.zero()
        for c in reversed(p.coeffs):
            acc = acc * z + c
        return acc
    z = complex(z)
    acc = 0j
    for c in reversed(complex_coeffs(p)):
        acc = acc * z + c
    return acc


def complex_coeffs(p: ExactPoly) -> List[complex]:
    return [c.to_complex() for c in p.coeffs]
