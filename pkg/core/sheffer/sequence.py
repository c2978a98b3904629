"""
Meixner 类正交 Sheffer 序列

s_n 由三项递推精确构造；p_n 是把 l 换成 σ/α 的同一递推（Meixner-II 下 s_n(x) = p_n(x + σ/α)）。
基变换以附录中的闭式展开为主路径，三角求解只作为对照。
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import List, Sequence

from core.combinat import (
    GaussRational, gen_stirling, gr, register_dependent_cache, stirling1, stirling2,
)
from core.errors import DomainError
from core.sheffer.params import MeixnerParams
from core.sheffer.poly import Basis, ExactPoly, require_basis, shift


# ==================== 递推构造 ====================

def _recurrence(params: MeixnerParams, ell: GaussRational, n: int) -> ExactPoly:
    lam, eta, sigma = params.lam, params.eta, params.sigma
    prev, cur = ExactPoly.zero(), ExactPoly.constant(1)
    for m in range(n):
        # s_{m+1} = (x − λm − l) s_m − (σm + ηm(m−1)) s_{m−1}
        shifted_cur = ExactPoly(Basis.MONOMIAL, (GaussRational.zero(),) + cur.coeffs)
        nxt = shifted_cur - cur.scale(lam * m + ell) - prev.scale(sigma * m + eta * (m * (m - 1)))
        prev, cur = cur, nxt
    return cur


@lru_cache(maxsize=1024)
def sheffer_poly(params: MeixnerParams, n: int) -> ExactPoly:
    """s_n 的单项式展开（首一，次数 n）"""
    if n < 0:
        raise DomainError(f"sheffer_poly: n={n} 必须非负")
    return _recurrence(params, params.ell, n)


@lru_cache(maxsize=1024)
def shifted_poly(params: MeixnerParams, n: int) -> ExactPoly:
    """p_n：递推中 l 取 σ/α"""
    if n < 0:
        raise DomainError(f"shifted_poly: n={n} 必须非负")
    return _recurrence(params, params.sigma_over_alpha, n)


# ==================== 阶梯算子（Sheffer 基） ====================

def raise_(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """∂⁺ s_n = s_{n+1}"""
    require_basis(p, Basis.SHEFFER, "∂⁺")
    if p.is_zero:
        return p
    return ExactPoly(Basis.SHEFFER, (GaussRational.zero(),) + p.coeffs)


def lower(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """∂⁻ s_n = n s_{n−1}"""
    require_basis(p, Basis.SHEFFER, "∂⁻")
    return ExactPoly(Basis.SHEFFER, tuple(n * c for n, c in enumerate(p.coeffs) if n >= 1))


def annihilator(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """A⁻ = σ∂⁻ + η∂⁺(∂⁻)²，即 A⁻ s_n = n(σ + η(n−1)) s_{n−1}"""
    require_basis(p, Basis.SHEFFER, "A⁻")
    sigma, eta = params.sigma, params.eta
    return ExactPoly(Basis.SHEFFER, tuple(
        c * n * (sigma + eta * (n - 1)) for n, c in enumerate(p.coeffs) if n >= 1
    ))


# ==================== 附录展开式 ====================

@lru_cache(maxsize=256)
def expand_monomial_in_shifted(params: MeixnerParams, n: int) -> tuple:
    """
    z^n = Σ_i c_{n,i} p_i 的系数 (c_{n,0}, …, c_{n,n})

    c_{n,i} = Σ_{k=max(i,1)}^{n} (α−β)^{n−k} S(n,k) S(k,i;−β,σ/α)；i=0 项即 Φ(z^n)。
    """
    if n == 0:
        return (GaussRational.one(),)
    d = params.alpha - params.beta
    r = params.sigma_over_alpha
    out = []
    for i in range(n + 1):
        acc = GaussRational.zero()
        for k in range(max(i, 1), n + 1):
            acc = acc + d ** (n - k) * stirling2(n, k) * gen_stirling(k, i, -params.beta, r)
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=256)
def shifted_in_monomial(params: MeixnerParams, n: int) -> ExactPoly:
    """
    p_n 的单项式展开

    z^i 的系数为 Σ_{k=i}^{n} S(n,k;β,−σ/α)(α−β)^{k−i} s(k,i)，常数项为 (−σ/α|β)_n。
    """
    d = params.alpha - params.beta
    r = -params.sigma_over_alpha
    coeffs = []
    for i in range(n + 1):
        acc = GaussRational.zero()
        for k in range(i, n + 1):
            s_ki = stirling1(k, i)
            if s_ki:
                acc = acc + gen_stirling(n, k, params.beta, r) * d ** (k - i) * s_ki
        coeffs.append(acc)
    return ExactPoly(Basis.MONOMIAL, tuple(coeffs))


for _cached in (expand_monomial_in_shifted, shifted_in_monomial):
    register_dependent_cache(_cached.cache_clear)


# ==================== 基变换 ====================

def _monomial_to_shifted_coeffs(params: MeixnerParams, p: ExactPoly) -> List[GaussRational]:
    out = [GaussRational.zero()] * len(p.coeffs)
    for n, a in enumerate(p.coeffs):
        if not a:
            continue
        for i, c in enumerate(expand_monomial_in_shifted(params, n)):
            out[i] = out[i] + a * c
    return out


def _shifted_coeffs_to_monomial(params: MeixnerParams, coeffs: Sequence[GaussRational]) -> ExactPoly:
    acc = ExactPoly.zero()
    for n, f in enumerate(coeffs):
        if f:
            acc = acc + shifted_in_monomial(params, n).scale(f)
    return acc


def falling_to_monomial(beta, p: ExactPoly) -> ExactPoly:
    """(z|β)_n = Σ_k s(n,k) β^{n−k} z^k"""
    require_basis(p, Basis.FALLING_BETA, "下降阶乘基转换")
    beta = gr(beta)
    out = [GaussRational.zero()] * len(p.coeffs)
    for n, f in enumerate(p.coeffs):
        if not f:
            continue
        for k in range(n + 1):
            s = stirling1(n, k)
            if s:
                out[k] = out[k] + f * s * beta ** (n - k)
    return ExactPoly(Basis.MONOMIAL, tuple(out))


def monomial_to_falling(beta, p: ExactPoly) -> ExactPoly:
    """z^n = Σ_k S(n,k) β^{n−k} (z|β)_k"""
    require_basis(p, Basis.MONOMIAL, "下降阶乘基转换")
    beta = gr(beta)
    if not beta:
        raise DomainError("下降 β 阶乘基要求 β ≠ 0")
    out = [GaussRational.zero()] * len(p.coeffs)
    for n, a in enumerate(p.coeffs):
        if not a:
            continue
        for k in range(n + 1):
            S = stirling2(n, k)
            if S:
                out[k] = out[k] + a * S * beta ** (n - k)
    return ExactPoly(Basis.FALLING_BETA, tuple(out))


def to_monomial(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """任意基 → 单项式基"""
    if p.basis is Basis.MONOMIAL:
        return p
    if p.basis is Basis.FALLING_BETA:
        return falling_to_monomial(params.beta, p)
    # Σ f_n s_n(x) = q(x + shift)，q = Σ f_n p_n
    q = _shifted_coeffs_to_monomial(params, p.coeffs)
    return shift(q, params.shift)


def to_sheffer(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """任意基 → Sheffer 基，走附录闭式"""
    if p.basis is Basis.SHEFFER:
        return p
    m = to_monomial(params, p)
    # p(x) = q(x + shift) ⇒ q(y) = p(y − shift)
    q = shift(m, -params.shift)
    return ExactPoly(Basis.SHEFFER, tuple(_monomial_to_shifted_coeffs(params, q)))


def to_falling_beta(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """任意基 → 下降 β 阶乘基"""
    if p.basis is Basis.FALLING_BETA:
        return p
    return monomial_to_falling(params.beta, to_monomial(params, p))


def convert(params: MeixnerParams, p: ExactPoly, basis: Basis) -> ExactPoly:
    return {
        Basis.MONOMIAL: to_monomial,
        Basis.SHEFFER: to_sheffer,
        Basis.FALLING_BETA: to_falling_beta,
    }[basis](params, p)


def to_sheffer_by_solve(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """对照路径：用 sheffer_poly 的系数回代求解上三角方程组"""
    m = to_monomial(params, p)
    rest = list(m.coeffs)
    out = [GaussRational.zero()] * len(rest)
    for n in range(len(rest) - 1, -1, -1):
        c = rest[n]
        if not c:
            continue
        out[n] = c
        s_n = sheffer_poly(params, n)
        for k, a in enumerate(s_n.coeffs):
            rest[k] = rest[k] - c * a
    return ExactPoly(Basis.SHEFFER, tuple(out))


def sheffer_combination_in_monomial(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """对照路径：直接用 sheffer_poly 把 Σ f_n s_n 相加"""
    require_basis(p, Basis.SHEFFER, "Sheffer 组合展开")
    acc = ExactPoly.zero()
    for n, f in enumerate(p.coeffs):
        if f:
            acc = acc + sheffer_poly(params, n).scale(f)
    return acc


# ==================== 差分系数 ====================

def series_coefficients_by_difference(values: Sequence, beta, n: int):
    """
    由 φ(βk), k=0..n 求第 n 个下降 β 系数

    f_n = ((−1)^n/(n! β^n)) Σ_k (−1)^k C(n,k) φ(βk)。values 全为 GaussRational 时精确，否则按复浮点。
    """
    if len(values) < n + 1:
        raise DomainError(f"需要 {n + 1} 个采样值，收到 {len(values)}")
    exact = isinstance(beta, GaussRational) or isinstance(beta, int)
    exact = exact and all(isinstance(v, (GaussRational, int)) for v in values[: n + 1])
    if exact:
        beta = gr(beta)
        if not beta:
            raise DomainError("series_coefficients_by_difference 要求 β ≠ 0")
        acc = GaussRational.zero()
        for k in range(n + 1):
            acc = acc + (-1) ** k * comb(n, k) * gr(values[k])
        return acc * (-1) ** n / (factorial(n) * beta ** n)
    beta = complex(beta)
    if beta == 0:
        raise DomainError("series_coefficients_by_difference 要求 β ≠ 0")
    acc = sum((-1) ** k * comb(n, k) * complex(values[k]) for k in range(n + 1))
    return acc * (-1) ** n / (factorial(n) * beta ** n)
