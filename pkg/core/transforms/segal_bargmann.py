"""
Segal–Bargmann 型变换 𝕊 = 𝕋∘𝓢

系数层：𝕊 s_n = zⁿ，𝓢 s_n = (z|β)_n，𝕋 (·|β)_n = zⁿ。
积分层：相干态积分、复参数测度积分、Poisson 表示与随机测度 ρ 的双重积分。
"""
from __future__ import annotations

from math import comb
from typing import Callable, List, Sequence

from core.combinat import GaussRational, genfact, gr
from core.errors import DomainError
from core.measures import PolyBound, QuadConfig, csum, integrate, orthogonality_measure, poisson_expect
from core.sheffer import (
    Basis, ExactPoly, MeixnerClass, MeixnerParams, complex_coeffs, evaluate, require_basis,
    series_coefficients_by_difference, to_monomial, to_sheffer,
)
from core.weylalg import ConcreteOp, OpTag, apply_concrete
from core.transforms.coherent import coherent_E
from core.transforms.domains import DomainKind, DomainPredicateSet
from core.transforms.fock import curly_f_inner
from core.transforms.series import SeriesEval, power_weights_series
from core.utils.logger import logger


def _as_sheffer(params: MeixnerParams, f: ExactPoly) -> ExactPoly:
    return to_sheffer(params, f)


def _monomial_callable(params: MeixnerParams, f: ExactPoly) -> Callable[[complex], complex]:
    m = to_monomial(params, f)
    return lambda x: evaluate(m, x)


def _monomial_bound(params: MeixnerParams, f: ExactPoly) -> PolyBound:
    return PolyBound.from_coeffs(complex_coeffs(to_monomial(params, f)))


def _taylor_shift(coeffs: Sequence[complex], a: complex) -> List[complex]:
    """p(x) ↦ p(x + a) 的升幂系数"""
    return [sum(coeffs[i] * comb(i, j) * a ** (i - j) for i in range(j, len(coeffs)))
            for j in range(len(coeffs))]


# ==================== 系数层 ====================

def transform_S(params: MeixnerParams, f: ExactPoly, z: complex, tail_bound: float = 0.0) -> SeriesEval:
    """
    (𝕊f)(z) = Σ f_n zⁿ，f 以 Sheffer 基给出（其它基先转换）

    tail_bound 透传 f 的截断误差上界。
    """
    f = _as_sheffer(params, f)
    return SeriesEval(power_weights_series(complex_coeffs(f), z), len(f.coeffs), tail_bound)


def transform_S_exact(params: MeixnerParams, f: ExactPoly) -> ExactPoly:
    """𝕊f 的单项式系数：s_n ↦ zⁿ"""
    return _as_sheffer(params, f).with_basis(Basis.MONOMIAL)


def curly_S_exact(params: MeixnerParams, f: ExactPoly) -> ExactPoly:
    """𝓢f 的下降 β 阶乘系数：s_n ↦ (z|β)_n"""
    return _as_sheffer(params, f).with_basis(Basis.FALLING_BETA)


def transform_T_exact(f: ExactPoly) -> ExactPoly:
    """𝕋：(·|β)_n ↦ zⁿ"""
    require_basis(f, Basis.FALLING_BETA, "𝕋")
    return f.with_basis(Basis.MONOMIAL)


def _curly_S_domain(params: MeixnerParams, z: complex):
    which = DomainKind.PSI if params.is_meixner_second else DomainKind.D_ABS
    DomainPredicateSet(params).require(which, z)


def transform_curlyS(params: MeixnerParams, f: ExactPoly, z: complex) -> complex:
    """
    (𝓢f)(z) = Σ f_n (z|β)_n

    Raises:
        DomainError: Laguerre/Meixner-I 要求 z ∈ 𝓓；Meixner-II 要求 z ∈ Ψ
    """
    _curly_S_domain(params, z)
    f = _as_sheffer(params, f)
    z, beta = complex(z), params.beta_c
    return csum(c * genfact(z, beta, n) for n, c in enumerate(complex_coeffs(f)))


def curly_S_value_exact(params: MeixnerParams, f: ExactPoly, z) -> GaussRational:
    """z 为高斯有理数时 (𝓢f)(z) 的精确值（不做定义域检查，用于格点 βk）"""
    f = _as_sheffer(params, f)
    z = gr(z)
    acc = GaussRational.zero()
    for n, c in enumerate(f.coeffs):
        if c:
            acc = acc + c * genfact(z, params.beta, n)
    return acc


def transform_T(params: MeixnerParams, f: ExactPoly, z: complex) -> SeriesEval:
    """(𝕋f)(z) = Σ f_n zⁿ，f 为下降 β 阶乘基"""
    require_basis(f, Basis.FALLING_BETA, "𝕋")
    return SeriesEval(power_weights_series(complex_coeffs(f), z), len(f.coeffs), 0.0)


def composition_check(params: MeixnerParams, f: ExactPoly) -> bool:
    """
    𝕊 = 𝕋∘𝓢，精确到系数

    由 (𝓢f)(βk), k=0..N 经差分公式还原下降 β 系数，再经 𝕋 得到的单项式系数须与 𝕊f 一致。
    """
    f = _as_sheffer(params, f)
    degree = f.degree
    if degree < 0:
        return transform_S_exact(params, f).is_zero
    values = [curly_S_value_exact(params, f, params.beta * k) for k in range(degree + 1)]
    recovered = ExactPoly(Basis.FALLING_BETA, tuple(
        series_coefficients_by_difference(values, params.beta, n) for n in range(degree + 1)
    ))
    return transform_T_exact(recovered) == transform_S_exact(params, f)


# ==================== 积分层 ====================

def transform_S_integral(params: MeixnerParams, f: ExactPoly, z: complex,
                         cfg: QuadConfig = QuadConfig(), tol: float = 1e-12) -> complex:
    """(𝕊f)(z) = ∫ f(x) E(x,z) μ_{α,β,σ}(dx)"""
    spec = orthogonality_measure(params)
    fx = _monomial_callable(params, f)
    z = complex(z)
    return integrate(spec, lambda x: fx(x) * coherent_E(params, x, z, tol).value, cfg).value


def transform_curlyS_integral(params: MeixnerParams, f: ExactPoly, z: complex,
                              cfg: QuadConfig = QuadConfig()) -> complex:
    """
    Laguerre/Meixner-I: (𝓢f)(z) = ∫ f dμ_{α,β,αz+σ}
    Meixner-II: (𝓢f)(z) = ∫ f(x+z) dμ_{α,β,αz+σ}，z ∈ Ψ
    """
    _curly_S_domain(params, z)
    z = complex(z)
    spec = orthogonality_measure(params, params.alpha_c * z + params.sigma_f)
    fx = _monomial_callable(params, f)
    bound = _monomial_bound(params, f)
    if params.is_meixner_second:
        return integrate(spec, lambda x: fx(x + z), cfg, bound.shifted(z)).value
    return integrate(spec, fx, cfg, bound).value


def transform_T_poisson(params: MeixnerParams, f: ExactPoly, z: complex,
                        cfg: QuadConfig = QuadConfig()) -> complex:
    """(𝕋f)(z) = ∫ f(βξ) dπ_{z/β}(ξ)，f 为下降 β 阶乘基"""
    require_basis(f, Basis.FALLING_BETA, "𝕋")
    beta = params.beta_c
    if beta == 0:
        raise DomainError("transform_T_poisson 要求 β ≠ 0")
    coeffs = complex_coeffs(f)
    bound = _monomial_bound(params, f)

    def at_lattice(k: int) -> complex:
        point = beta * k
        return csum(c * genfact(point, beta, n) for n, c in enumerate(coeffs))

    return poisson_expect(complex(z) / beta, at_lattice, cfg, bound.scaled(beta)).value


def rho_expectation(params: MeixnerParams, f: ExactPoly, z: complex,
                    cfg: QuadConfig = QuadConfig()) -> complex:
    """
    (𝕊f)(z) = Σ_ξ π_{z/β}(ξ) ∫ f dμ_{α,β,ηξ+σ}

    Meixner-II 使用平移形式 ∫ f(x+βξ) dμ_{α,β,ηξ+σ}。
    """
    beta = params.beta_c
    eta, sigma = params.eta_f, params.sigma_f
    fx = _monomial_callable(params, f)
    bound = _monomial_bound(params, f)

    def inner(xi: int) -> complex:
        spec = orthogonality_measure(params, eta * xi + sigma)
        if params.is_meixner_second:
            offset = beta * xi
            return integrate(spec, lambda x: fx(x + offset), cfg, bound.shifted(offset)).value
        return integrate(spec, fx, cfg, bound).value

    value = poisson_expect(complex(z) / beta, inner, cfg).value
    logger.debug(f"ρ 期望 {params} z={z}: {value}")
    return value


# ==================== V 的作用 ====================

def v_symbolic(params: MeixnerParams, p: ExactPoly) -> ExactPoly:
    """V = (1−αD_{β−α})⁻¹ 在单项式基上：换到 Sheffer 基作用 V s_n = αn s_{n−1} + s_n 再换回"""
    require_basis(p, Basis.MONOMIAL, "V")
    q = apply_concrete(ConcreteOp(OpTag.RAW_V, params), to_sheffer(params, p))
    return to_monomial(params, q)


def v_integral_action(params: MeixnerParams, p: ExactPoly, z: complex,
                      cfg: QuadConfig = QuadConfig()) -> complex:
    """
    (Vp)(z) 的积分表示

    Laguerre: ∫ p(z+x) dμ_{α,α,η}
    Meixner-I: ∫ [p(z+x)α/β − p(z)(α−β)/β] dμ_{α,β,η}
    Meixner-II: ∫ [p(z+x+β)α/β − p(z)(α−β)/β] dμ_{α,β,η}
    """
    m = to_monomial(params, p)
    z = complex(z)
    spec = orthogonality_measure(params, params.eta_f)
    coeffs = complex_coeffs(m)
    if params.family is MeixnerClass.LAGUERRE:
        bound = PolyBound.from_coeffs(coeffs).shifted(z)
        return integrate(spec, lambda x: evaluate(m, z + x), cfg, bound).value
    alpha, beta = params.alpha_c, params.beta_c
    offset = beta if params.is_meixner_second else 0j
    base = evaluate(m, z) * (alpha - beta) / beta
    # 被积函数本身是 x 的多项式：p(z+offset+x)·α/β − base
    g = _taylor_shift(coeffs, z + offset)
    g = [c * alpha / beta for c in g]
    if g:
        g[0] -= base
    bound = PolyBound.from_coeffs(g)
    return integrate(spec, lambda x: evaluate(m, z + x + offset) * alpha / beta - base,
                     cfg, bound).value


# ==================== 等距 ====================

def l2_norm_squared(params: MeixnerParams, f: ExactPoly, cfg: QuadConfig = QuadConfig()) -> float:
    """‖f‖²_{L²(μ_{α,β,σ})}，数值积分"""
    fx = _monomial_callable(params, f)
    bound = _monomial_bound(params, f).squared_modulus()
    return integrate(orthogonality_measure(params), lambda x: abs(fx(x)) ** 2, cfg, bound).value.real


def isometry_pair(params: MeixnerParams, f: ExactPoly, cfg: QuadConfig = QuadConfig()):
    """(‖f‖²_{L²(μ)} 数值值, ‖𝓢f‖²_𝓕 = Σ|f_n|² n!(σ|−η)_n)"""
    coeffs = curly_S_exact(params, f)
    target = curly_f_inner(params, coeffs, coeffs).real
    return l2_norm_squared(params, f, cfg), target
