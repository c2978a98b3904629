"""
具体算子

把 Z、D、D_h、𝓤、𝓥、𝕌、𝕍、ρ、𝓡 以及 Sheffer 基上的 U、V、∂±、A⁻ 实现为多项式上的精确线性映射。
每个算子有一个自然基，输入必须处于该基。
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Optional, Tuple

from core.combinat import GaussRational, gr, rising, stirling1, stirling2
from core.errors import DomainError
from core.sheffer import (
    Basis, ExactPoly, MeixnerParams, annihilator, derivative, genfact_poly, h_difference,
    lower, mul_x, raise_, require_basis,
)
from core.weylalg.normal_form import NormalForm
from core.weylalg.parser import Generator, OperatorExpr, Power, Product, Scalar, Sum


class OpTag(Enum):
    Z = "Z"
    D = "D"
    D_H = "D_h"
    SCRIPT_U = "ScriptU"
    SCRIPT_V = "ScriptV"
    BLACK_U = "BlackU"
    BLACK_V = "BlackV"
    RAW_U = "RawU"
    RAW_V = "RawV"
    RHO = "Rho"
    SCRIPT_R = "ScriptR"
    ANNIHILATOR = "Annihilator"
    RAISE_PLUS = "RaisePlus"
    LOWER_MINUS = "LowerMinus"


_SHEFFER_TAGS = {OpTag.RAW_U, OpTag.RAW_V, OpTag.ANNIHILATOR, OpTag.RAISE_PLUS, OpTag.LOWER_MINUS}
_PARAMLESS = {OpTag.Z, OpTag.D, OpTag.D_H, OpTag.RAISE_PLUS, OpTag.LOWER_MINUS}


@dataclass(frozen=True)
class ConcreteOp:
    """带参数的具体算子"""
    tag: OpTag
    params: Optional[MeixnerParams] = None
    h: GaussRational = GaussRational.zero()

    def __post_init__(self):
        if self.tag not in _PARAMLESS and self.params is None:
            raise DomainError(f"算子 {self.tag.value} 需要 Meixner 参数")
        object.__setattr__(self, "h", gr(self.h))

    @property
    def natural_basis(self) -> Basis:
        return Basis.SHEFFER if self.tag in _SHEFFER_TAGS else Basis.MONOMIAL


def _apply_sheffer(op: ConcreteOp, p: ExactPoly) -> ExactPoly:
    params = op.params
    if op.tag is OpTag.RAISE_PLUS:
        return raise_(params, p)
    if op.tag is OpTag.LOWER_MINUS:
        return lower(params, p)
    if op.tag is OpTag.ANNIHILATOR:
        return annihilator(params, p)
    if op.tag is OpTag.RAW_U:
        # U s_n = s_{n+1} + (βn + σ/α) s_n
        up = raise_(params, p)
        diag = ExactPoly(Basis.SHEFFER, tuple(
            c * (params.beta * n + params.sigma_over_alpha) for n, c in enumerate(p.coeffs)
        ))
        return up + diag
    # V s_n = α n s_{n−1} + s_n
    return lower(params, p).scale(params.alpha) + p


def _apply_monomial(op: ConcreteOp, p: ExactPoly) -> ExactPoly:
    params = op.params
    tag = op.tag
    if tag is OpTag.Z:
        return mul_x(p)
    if tag is OpTag.D:
        return derivative(p)
    if tag is OpTag.D_H:
        return h_difference(p, op.h)
    c = params.sigma_over_alpha if params is not None else None
    if tag is OpTag.SCRIPT_U:
        # 𝓤 = Z + σ/α
        return mul_x(p) + p.scale(c)
    if tag is OpTag.SCRIPT_V:
        # 𝓥 = αD_β + 1
        return h_difference(p, params.beta).scale(params.alpha) + p
    if tag is OpTag.BLACK_U:
        # 𝕌 = Z + βZD + σ/α
        return mul_x(p) + mul_x(derivative(p)).scale(params.beta) + p.scale(c)
    if tag is OpTag.BLACK_V:
        # 𝕍 = αD + 1
        return derivative(p).scale(params.alpha) + p
    if tag is OpTag.RHO:
        # ρ = Z + λZD + σ/α + σD + ηZD²
        dp = derivative(p)
        return (mul_x(p) + mul_x(dp).scale(params.lam) + p.scale(c)
                + dp.scale(params.sigma) + mul_x(derivative(dp)).scale(params.eta))
    if tag is OpTag.SCRIPT_R:
        # 𝓡 = 𝓤𝓥
        v = _apply_monomial(ConcreteOp(OpTag.SCRIPT_V, params), p)
        return _apply_monomial(ConcreteOp(OpTag.SCRIPT_U, params), v)
    raise DomainError(f"未知算子 {tag}")


def apply_concrete(op: ConcreteOp, p: ExactPoly) -> ExactPoly:
    """
    在自然基上精确作用

    Raises:
        BasisMismatchError: p 不在算子的自然基
    """
    require_basis(p, op.natural_basis, op.tag.value)
    if op.natural_basis is Basis.SHEFFER:
        return _apply_sheffer(op, p)
    return _apply_monomial(op, p)


def apply_power(op: ConcreteOp, p: ExactPoly, n: int) -> ExactPoly:
    for _ in range(n):
        p = apply_concrete(op, p)
    return p


def apply_normal_form(nf: NormalForm, u_op: ConcreteOp, v_op: ConcreteOp, p: ExactPoly) -> ExactPoly:
    """Σ c_{jk} U^j V^k 作用在 p 上（先 V 后 U）"""
    acc = ExactPoly.zero(p.basis)
    for (j, k), c in nf.items():
        acc = acc + apply_power(u_op, apply_power(v_op, p, k), j).scale(c)
    return acc


def apply_expr(expr: OperatorExpr, u_op: ConcreteOp, v_op: ConcreteOp, p: ExactPoly) -> ExactPoly:
    """不经正规序，直接按 AST 作用；乘积 (AB)p = A(Bp)"""
    if isinstance(expr, Generator):
        return apply_concrete(u_op if expr.name == 'U' else v_op, p)
    if isinstance(expr, Scalar):
        return p.scale(expr.value)
    if isinstance(expr, Sum):
        return apply_expr(expr.left, u_op, v_op, p) + apply_expr(expr.right, u_op, v_op, p)
    if isinstance(expr, Product):
        return apply_expr(expr.left, u_op, v_op, apply_expr(expr.right, u_op, v_op, p))
    if isinstance(expr, Power):
        for _ in range(expr.exponent):
            p = apply_expr(expr.base, u_op, v_op, p)
        return p
    raise TypeError(f"未知的表达式节点: {expr!r}")


def raw_ops(params: MeixnerParams) -> tuple:
    """Sheffer 基上的 (U, V)，满足 [V,U] = βV + (α−β)"""
    return ConcreteOp(OpTag.RAW_U, params), ConcreteOp(OpTag.RAW_V, params)


def script_ops(params: MeixnerParams) -> tuple:
    """单项式基上的 (𝓤, 𝓥)"""
    return ConcreteOp(OpTag.SCRIPT_U, params), ConcreteOp(OpTag.SCRIPT_V, params)


# ==================== 𝓡ⁿ1 与矩 ====================

def script_r_shifted_coeffs(params: MeixnerParams, n: int) -> Tuple[GaussRational, ...]:
    """
    𝓡ⁿ1 在平移基 (z+σ/α|−β)_k 下的系数：c_k = (α−β)^{n−k} S(n,k)

    n = 0 时为 (1,)。
    """
    if n < 0:
        raise DomainError(f"script_r_on_one: n={n} 必须非负")
    if n == 0:
        return (GaussRational.one(),)
    d = params.alpha - params.beta
    return (GaussRational.zero(),) + tuple(d ** (n - k) * stirling2(n, k) for k in range(1, n + 1))


def script_r_on_one(params: MeixnerParams, n: int) -> ExactPoly:
    """
    𝓡ⁿ1 = Σ_{k=1}^{n} (α−β)^{n−k} S(n,k) (z+σ/α|−β)_k

    平移基系数见 script_r_shifted_coeffs；这里展开成单项式基返回，便于与逐次作用比较。
    """
    acc = ExactPoly.zero()
    for k, w in enumerate(script_r_shifted_coeffs(params, n)):
        if w:
            acc = acc + genfact_poly(params.sigma_over_alpha, -params.beta, k).scale(w)
    return acc


def moments(params: MeixnerParams, n: int) -> GaussRational:
    """
    Φ(zⁿ) = Σ_{k=1}^{n} (α−β)^{n−k} S(n,k) (σ/α|−β)_k

    Laguerre/Meixner-I 下是 μ 的 n 阶矩；Meixner-II 下是平移变量 x+σ/α 的 n 阶矩。
    """
    if n < 0:
        raise DomainError(f"moments: n={n} 必须非负")
    if n == 0:
        return GaussRational.one()
    d = params.alpha - params.beta
    r = params.sigma_over_alpha
    acc = GaussRational.zero()
    for k in range(1, n + 1):
        w = d ** (n - k) * stirling2(n, k)
        if w:
            # (σ/α|−β)_k
            f = GaussRational.one()
            for j in range(k):
                f = f * (r + params.beta * j)
            acc = acc + w * f
    return acc


def raw_moments(params: MeixnerParams, n: int) -> GaussRational:
    """x 本身的 n 阶矩；Meixner-II 用二项式修正 E[xⁿ] = Σ C(n,k)(−σ/α)^{n−k} E[(x+σ/α)^k]"""
    if not params.is_meixner_second:
        return moments(params, n)
    c = -params.sigma_over_alpha
    acc = GaussRational.zero()
    for k in range(n + 1):
        acc = acc + comb(n, k) * c ** (n - k) * moments(params, k)
    return acc


def falling_alpha_beta_moment(params: MeixnerParams, n: int) -> GaussRational:
    """∫(x|α−β)_n dμ = βⁿ (σ/η)^{(n)}（Meixner-II 对 x+σ/α）"""
    if n < 0:
        raise DomainError(f"falling_alpha_beta_moment: n={n} 必须非负")
    return params.beta ** n * rising(params.sigma / params.eta, n)


def falling_moment_via_moments(params: MeixnerParams, n: int) -> GaussRational:
    """对照路径：(y|α−β)_n = Σ s(n,k)(α−β)^{n−k} y^k，再逐项代入 Φ(y^k)"""
    d = params.alpha - params.beta
    acc = GaussRational.zero()
    for k in range(n + 1):
        s = stirling1(n, k)
        if s:
            acc = acc + s * d ** (n - k) * moments(params, k)
    return acc
