"""
具体表示上的恒等式检验

全部在精确层完成，返回布尔值。
"""
from __future__ import annotations

from math import factorial

from core.combinat import GaussRational
from core.sheffer import (
    Basis, ExactPoly, MeixnerParams, expand_monomial_in_shifted, genfact_poly, h_difference,
    lower, monomial_to_falling, mul_x, shifted_in_monomial, to_monomial, to_sheffer,
)
from core.weylalg.concrete import (
    ConcreteOp, OpTag, apply_concrete, apply_expr, apply_normal_form, raw_ops,
)
from core.weylalg.normal_form import normal_order
from core.weylalg.parser import OperatorExpr


def one_minus_alpha_d(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """(1 − αD_{β−α}) p，单项式基；β=α 时 D_0 即 D"""
    return p - h_difference(p, params.beta - params.alpha).scale(params.alpha)


def _raw_on_monomial(params: MeixnerParams, tag: OpTag, p: ExactPoly) -> ExactPoly:
    """把单项式基的 p 换到 Sheffer 基，作用 U 或 V，再换回"""
    q = apply_concrete(ConcreteOp(tag, params), to_sheffer(params, p))
    return to_monomial(params, q)


def factorization_check(params: MeixnerParams, p: ExactPoly) -> bool:
    """
    U = Z(1−αD_{β−α})（Meixner-II 为 (Z+σ/α)(1−αD_{β−α})），
    且 V(1−αD_{β−α})p = (1−αD_{β−α})Vp = p
    """
    w = one_minus_alpha_d(params, p)
    rhs = mul_x(w)
    if params.is_meixner_second:
        rhs = rhs + w.scale(params.sigma_over_alpha)
    if _raw_on_monomial(params, OpTag.RAW_U, p) != rhs:
        return False
    if _raw_on_monomial(params, OpTag.RAW_V, w) != p:
        return False
    return one_minus_alpha_d(params, _raw_on_monomial(params, OpTag.RAW_V, p)) == p


def conjugation_op(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """𝓘：(·|β)_n ↦ p_n，输入为下降 β 阶乘基，输出为单项式基"""
    acc = ExactPoly.zero()
    for n, f in enumerate(p.coeffs):
        if f:
            acc = acc + shifted_in_monomial(params, n).scale(f)
    return acc


def conjugation_inverse(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """𝓘⁻¹：单项式基 → 下降 β 阶乘基"""
    out = [GaussRational.zero()] * len(p.coeffs)
    for n, a in enumerate(p.coeffs):
        if not a:
            continue
        for i, c in enumerate(expand_monomial_in_shifted(params, n)):
            out[i] = out[i] + a * c
    return ExactPoly(Basis.FALLING_BETA, tuple(out))


def conjugation_check(params: MeixnerParams, p: ExactPoly) -> bool:
    """Z = 𝓘𝓡𝓘⁻¹ 作用在单项式基的 p 上"""
    falling = conjugation_inverse(params, p)
    as_monomial = to_monomial(params, falling)
    r = apply_concrete(ConcreteOp(OpTag.SCRIPT_R, params), as_monomial)
    back = conjugation_op(params, monomial_to_falling(params.beta, r))
    return back == mul_x(p)


def rho_transfer_check(params: MeixnerParams, p: ExactPoly) -> bool:
    """
    J：z^n ↦ s_n 下 ρ（Meixner-II 为 ρ−σ/α）拉回为乘 x

    p 为 Sheffer 基。
    """
    pulled = p.with_basis(Basis.MONOMIAL)
    image = apply_concrete(ConcreteOp(OpTag.RHO, params), pulled)
    if params.is_meixner_second:
        image = image - pulled.scale(params.sigma_over_alpha)
    lhs = image.with_basis(Basis.SHEFFER)
    rhs = to_sheffer(params, mul_x(to_monomial(params, p)))
    return lhs == rhs


def lowering_on_falling_check(params: MeixnerParams, n: int) -> bool:
    """∂⁻(·|α−β)_n = Σ_{k<n} (n!/k!) β^{n−k−1} (·|α−β)_k"""
    d = params.alpha - params.beta
    target = genfact_poly(0, d, n)
    lowered = to_monomial(params, lower(params, to_sheffer(params, target)))
    expected = ExactPoly.zero()
    for k in range(n):
        w = params.beta ** (n - k - 1) * (factorial(n) // factorial(k))
        expected = expected + genfact_poly(0, d, k).scale(w)
    return lowered == expected


def concrete_realization_check(params: MeixnerParams, expr: OperatorExpr, m: int) -> bool:
    """a=β, b=α−β 的正规形在 (U,V) 表示下作用于 s_m，与原式直接作用一致"""
    u_op, v_op = raw_ops(params)
    nf = normal_order(expr, params.beta, params.alpha - params.beta)
    s_m = ExactPoly.basis_element(m, Basis.SHEFFER)
    return apply_normal_form(nf, u_op, v_op, s_m) == apply_expr(expr, u_op, v_op, s_m)


def script_r_iterated(params: MeixnerParams, n: int) -> ExactPoly:
    """对照路径：把 𝓡 = 𝓤𝓥 逐次作用在 1 上"""
    p = ExactPoly.constant(1)
    op = ConcreteOp(OpTag.SCRIPT_R, params)
    for _ in range(n):
        p = apply_concrete(op, p)
    return p
