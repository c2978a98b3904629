"""
非线性相干态 E(x,z) 与 𝓔(x,z)

E 以级数为主路径，Poisson 混合闭式为对照；𝓔 以闭式为主路径，级数为对照。
"""
from __future__ import annotations

import cmath
import math

from core.combinat import GaussRational, genfact, gr
from core.errors import DomainError
from core.measures import (
    QuadConfig, complex_loggamma, poisson_expect, principal_arg,
)
from core.sheffer import Basis, ExactPoly, MeixnerClass, MeixnerParams, annihilator
from core.transforms.domains import DomainKind, DomainPredicateSet
from core.transforms.fock import coherent_weight
from core.transforms.series import SeriesEval, coherent_series
from core.utils.logger import logger


def _support_point(params: MeixnerParams, x) -> complex:
    """校验 x 在 μ_{α,β,σ} 的支撑上"""
    x = complex(x)
    if params.family is MeixnerClass.LAGUERRE:
        if x.imag != 0 or x.real < 0:
            raise DomainError(f"x={x} 不在支撑 ℝ₊ 上")
    elif params.family is MeixnerClass.MEIXNER_FIRST:
        _lattice_index(params, x)
    elif x.imag != 0:
        raise DomainError(f"x={x} 不在支撑 ℝ 上")
    return x


def _lattice_index(params: MeixnerParams, x: complex) -> int:
    step = (params.alpha - params.beta).to_complex().real
    n = x.real / step
    k = round(n)
    if x.imag != 0 or abs(n - k) > 1e-9 or k < 0:
        raise DomainError(f"x={x} 不在支撑 {step:g}·ℕ₀ 上")
    return k


# ==================== E(x,z) ====================

def coherent_E(params: MeixnerParams, x, z: complex, tol: float = 1e-12) -> SeriesEval:
    """
    E(x,z) = Σ zⁿ s_n(x) / (n!(σ|−η)_n)

    Args:
        params: Meixner 参数
        x: 支撑中的点
        z: 任意复数
        tol: 相对截断容差

    Returns:
        SeriesEval: 值、项数与尾部上界
    """
    x = _support_point(params, x)
    z = complex(z)
    return coherent_series(params, x, lambda n: z, tol, "E(x,z) 级数")


def _meixner_second_pieces(params: MeixnerParams, x: float):
    """(A, θ, w)：A = 2cos(π/2−Arg α)，θ = π/2−Arg α，w = −ix/(2Im α) − iσα/(2η Im α)"""
    alpha = params.alpha_c
    theta = math.pi / 2 - principal_arg(alpha)
    w = -1j * x / (2 * alpha.imag) - 1j * params.sigma_f * alpha / (2 * params.eta_f * alpha.imag)
    return 2 * math.cos(theta), theta, w


def lattice_curly_E(params: MeixnerParams, x, xi: int) -> complex:
    """
    𝓔(x, βξ)，ξ ∈ ℕ₀

    Laguerre: (x/α)^ξ / (σ/η)^{(ξ)}
    Meixner-I: (1−β/α)^ξ (ξη+σ|−η)_n / (σ|−η)_n，x = (α−β)n
    Meixner-II: A^ξ e^{iθξ} (w)^{(ξ)} / (σ/η)^{(ξ)}
    """
    x = _support_point(params, x)
    s = params.sigma_f / params.eta_f
    rising_s = genfact(s, -1, xi)
    if params.family is MeixnerClass.LAGUERRE:
        return (x / params.alpha_c) ** xi / rising_s
    if params.family is MeixnerClass.MEIXNER_FIRST:
        n = _lattice_index(params, x)
        eta, sigma = params.eta_f, params.sigma_f
        ratio = (1 - params.beta_c.real / params.alpha_c.real) ** xi
        return ratio * genfact(xi * eta + sigma, -eta, n) / genfact(sigma, -eta, n)
    a, theta, w = _meixner_second_pieces(params, x.real)
    return a ** xi * cmath.exp(1j * theta * xi) * genfact(w, -1, xi) / rising_s


def coherent_E_closed(params: MeixnerParams, x, z: complex,
                      cfg: QuadConfig = QuadConfig()) -> SeriesEval:
    """
    E(x,z) = ∫ 𝓔(x, βξ) dπ_{z/β}(ξ)

    通过 poisson_expect 求和；项数与尾部上界取自级数截断。
    """
    x = _support_point(params, x)
    zeta = complex(z) / params.beta_c
    result = poisson_expect(zeta, lambda xi: lattice_curly_E(params, x, xi), cfg)
    return SeriesEval(result.value, result.nodes, result.error)


# ==================== 𝓔(x,z) ====================

def curly_E(params: MeixnerParams, x, z: complex) -> complex:
    """
    𝓔(x,z) 的闭式

    Laguerre: Γ(σ/α²)/Γ((αz+σ)/α²) · (x/α)^{z/α}（主值）
    Meixner-I: (1−β/α)^{z/β} (αz+σ|−η)_n / (σ|−η)_n，x = (α−β)n
    Meixner-II: A^{αz/η} Γ(σ/η)/Γ((σ+αz)/η) e^{iθαz/η} Γ(w+αz/η)/Γ(w)

    Raises:
        DomainError: z ∉ 𝓓_{α,β,σ} 或 x 不在支撑上
    """
    DomainPredicateSet(params).require(DomainKind.D_ABS, z)
    x = _support_point(params, x)
    z = complex(z)
    alpha, beta = params.alpha_c, params.beta_c
    eta, sigma = params.eta_f, params.sigma_f

    if params.family is MeixnerClass.LAGUERRE:
        power = z / alpha.real
        if x == 0:
            if z == 0:
                return 1 + 0j
            if power.real > 0:
                return 0j
            raise DomainError(f"x=0 时 (x/α)^(z/α) 要求 Re(z/α) > 0，收到 z={z}")
        log_value = (complex_loggamma(sigma / eta) - complex_loggamma((alpha * z + sigma) / eta)
                     + power * math.log(x.real / alpha.real))
        return cmath.exp(log_value)

    if params.family is MeixnerClass.MEIXNER_FIRST:
        n = _lattice_index(params, x)
        base = 1 - beta.real / alpha.real
        return (cmath.exp(z / beta.real * math.log(base))
                * genfact(alpha * z + sigma, -eta, n) / genfact(sigma, -eta, n))

    a, theta, w = _meixner_second_pieces(params, x.real)
    t = alpha * z / eta
    log_value = (t * math.log(a) + complex_loggamma(sigma / eta)
                 - complex_loggamma((sigma + alpha * z) / eta)
                 + 1j * theta * t
                 + complex_loggamma(w + t) - complex_loggamma(w))
    return cmath.exp(log_value)


def curly_E_series(params: MeixnerParams, x, z: complex, tol: float = 1e-12) -> SeriesEval:
    """
    𝓔(x,z) = Σ (z|β)_n s_n(x) / (n!(σ|−η)_n)

    z ∈ βℕ₀ 时级数有限；其余点靠抵消收敛，截断用观测比值。
    """
    DomainPredicateSet(params).require(DomainKind.D_ABS, z)
    x = _support_point(params, x)
    z = complex(z)
    beta = params.beta_c
    return coherent_series(params, x, lambda n: z - beta * n, tol, "𝓔(x,z) 级数", majorant=False)


# ==================== A⁻ 的本征关系 ====================

def coherent_truncation(params: MeixnerParams, z, n_max: int) -> ExactPoly:
    """E_N(·,z) = Σ_{n≤N} zⁿ s_n / (n!(σ|−η)_n)，Sheffer 基精确系数"""
    z = gr(z)
    coeffs = []
    power = GaussRational.one()
    for n in range(n_max + 1):
        coeffs.append(power / coherent_weight(params.eta, params.sigma, n))
        power = power * z
    return ExactPoly(Basis.SHEFFER, tuple(coeffs))


def annihilator_eigen_check(params: MeixnerParams, z, n_max: int) -> float:
    """
    A⁻E_N(·,z) − z·E_{N−1}(·,z) 的最大系数模；精确相等时为 0

    Raises:
        DomainError: N < 1
    """
    if n_max < 1:
        raise DomainError(f"annihilator_eigen_check 要求 N ≥ 1，收到 N={n_max}")
    z = gr(z)
    lhs = annihilator(params, coherent_truncation(params, z, n_max))
    rhs = coherent_truncation(params, z, n_max - 1).scale(z)
    diff = lhs - rhs
    residual = max((math.sqrt(float(c.abs2())) for c in diff.coeffs), default=0.0)
    if residual:
        logger.warning(f"A⁻ 本征关系残差 {residual:.3e}（{params}, z={z}, N={n_max}）")
    return residual
