"""
密度与质量函数

复参数 ζ 一律在对数空间计算后取指数；实参数路径另用 scipy.stats 作对照。
"""
from __future__ import annotations

import cmath
import math

from scipy import integrate, special, stats

from core.errors import ConvergenceError, DomainError
from core.measures.spec import MeasureKind, MeasureSpec, principal_arg
from core.measures.special import bessel_k, complex_loggamma

_LATTICE_EPS = 1e-9


def lattice_index(spec: MeasureSpec, x) -> int:
    """x = (α−β)n 时返回 n；NegBinomial 与 Poisson 共用"""
    x = complex(x)
    step = 1.0 if spec.kind is MeasureKind.POISSON_COMPLEX else (spec.alpha - spec.beta).real
    n = x.real / step
    k = round(n)
    if abs(x.imag) > _LATTICE_EPS or abs(n - k) > _LATTICE_EPS or k < 0:
        raise DomainError(f"x={x} 不在支撑 {step:g}·ℕ₀ 上")
    return k


# ==================== 对数密度 ====================

def log_gamma_density(spec: MeasureSpec, x: float) -> complex:
    """log[x^{k−1} e^{−x/α} / (Γ(k) α^k)]，k = ζ/η"""
    if x <= 0:
        raise DomainError(f"Gamma 测度的支撑为 ℝ₊，收到 x={x}")
    k = spec.shape
    alpha = spec.alpha.real
    return (k - 1) * math.log(x) - x / alpha - complex_loggamma(k) - k * math.log(alpha)


def log_neg_binomial_mass(spec: MeasureSpec, n: int) -> complex:
    """log[(1−β/α)^k (k)^{(n)} (β/α)^n / n!]"""
    p = (spec.beta / spec.alpha).real
    k = spec.shape
    log_rising = 0j
    for j in range(n):
        log_rising += cmath.log(k + j)
    return k * math.log1p(-p) + log_rising + n * math.log(p) - math.lgamma(n + 1)


def meixner_log_constant(alpha: complex, zeta: complex) -> complex:
    """
    log C_{α,β,ζ}

    C = (2cos(π/2−Arg α))^{ζ/η} / (4 Im(α) π Γ(ζ/η)) · exp((π/2−Arg α) ζ Re(α) / (Im(α) η))
    """
    eta = abs(alpha) ** 2
    theta = math.pi / 2 - principal_arg(alpha)
    k = zeta / eta
    return (k * math.log(2 * math.cos(theta))
            - math.log(4 * alpha.imag * math.pi)
            - complex_loggamma(k)
            + theta * zeta * alpha.real / (alpha.imag * eta))


def log_meixner_density(spec: MeasureSpec, x: float) -> complex:
    """log 密度：C exp((π/2−Arg α)x/Im α) Γ(ix/(2Im α) + iζβ/(2η Im α)) Γ(−ix/(2Im α) − iζα/(2η Im α))"""
    alpha, beta, zeta = spec.alpha, spec.beta, spec.zeta
    eta = spec.eta_value
    im = alpha.imag
    theta = math.pi / 2 - principal_arg(alpha)
    a1 = 1j * x / (2 * im) + 1j * zeta * beta / (2 * eta * im)
    a2 = -1j * x / (2 * im) - 1j * zeta * alpha / (2 * eta * im)
    return (meixner_log_constant(alpha, zeta) + theta * x / im
            + complex_loggamma(a1) + complex_loggamma(a2))


# ==================== 密度 ====================

def density(spec: MeasureSpec, x) -> complex:
    """
    测度在 x 处的密度或质量

    Args:
        spec: 测度描述
        x: 支撑中的点（FockLambda 取复数 z）

    Returns:
        complex: 密度值；ζ 为复数时一般为复数

    Raises:
        DomainError: x 不在支撑内
    """
    kind = spec.kind
    if kind is MeasureKind.GAMMA:
        x = _real_point(x)
        return cmath.exp(log_gamma_density(spec, x))
    if kind is MeasureKind.NEG_BINOMIAL:
        return cmath.exp(log_neg_binomial_mass(spec, lattice_index(spec, x)))
    if kind is MeasureKind.MEIXNER:
        return cmath.exp(log_meixner_density(spec, _real_point(x)))
    if kind is MeasureKind.POISSON_COMPLEX:
        return poisson_mass(spec.zeta, lattice_index(spec, x))
    return complex(fock_density(spec.eta, spec.sigma, abs(complex(x))))


def _real_point(x) -> float:
    x = complex(x)
    if x.imag != 0:
        raise DomainError(f"x={x} 不在实轴上")
    return x.real


def poisson_mass(zeta: complex, n: int) -> complex:
    """e^{−ζ} ζⁿ / n!"""
    if n < 0:
        raise DomainError(f"Poisson 质量要求 n ≥ 0，收到 n={n}")
    zeta = complex(zeta)
    if zeta == 0:
        return 1 + 0j if n == 0 else 0j
    return cmath.exp(-zeta + n * cmath.log(zeta) - math.lgamma(n + 1))


def real_density(spec: MeasureSpec, x) -> float:
    """
    ζ 为正实数时的实参数路径

    Gamma、NegBinomial 走 scipy.stats；Meixner 走 |Γ|² = exp(2 Re loggamma)。
    """
    if spec.zeta.imag != 0 or spec.zeta.real <= 0:
        raise DomainError(f"real_density 要求 ζ 为正实数，收到 ζ={spec.zeta}")
    k = spec.shape.real
    if spec.kind is MeasureKind.GAMMA:
        return float(stats.gamma.pdf(_real_point(x), a=k, scale=spec.alpha.real))
    if spec.kind is MeasureKind.NEG_BINOMIAL:
        p = (spec.beta / spec.alpha).real
        # scipy 的 nbinom 以成功概率 1−p 计
        return float(stats.nbinom.pmf(lattice_index(spec, x), k, 1 - p))
    if spec.kind is MeasureKind.MEIXNER:
        x = _real_point(x)
        alpha = spec.alpha
        im = alpha.imag
        theta = math.pi / 2 - principal_arg(alpha)
        w = 1j * x / (2 * im) + 1j * spec.zeta.real * alpha.conjugate() / (2 * spec.eta_value * im)
        log_c = (k * math.log(2 * math.cos(theta)) - math.log(4 * im * math.pi)
                 - math.lgamma(k) + theta * spec.zeta.real * alpha.real / (im * spec.eta_value))
        return math.exp(log_c + theta * x / im + 2 * special.loggamma(w).real)
    raise DomainError(f"real_density 不支持 {spec.kind.value}")


# ==================== Fock 测度 λ_{η,σ} ====================

def fock_density(eta: float, sigma: float, r: float) -> float:
    """
    Λ_{η,σ}(z) = (2η^{−(1+σ/η)/2} / (πΓ(σ/η))) |z|^{σ/η−1} K_{1−σ/η}(2|z|/√η)，r = |z|

    r=0 仅当 σ>η 时有限，极限为 1/(π(σ−η))。
    """
    s = sigma / eta
    if r < 0:
        raise DomainError(f"半径必须非负，收到 r={r}")
    if r == 0:
        if s > 1:
            return 1.0 / (math.pi * (sigma - eta))
        raise DomainError(f"σ/η={s:g} ≤ 1 时 Λ 在 z=0 处发散")
    log_pref = math.log(2) - 0.5 * (1 + s) * math.log(eta) - math.log(math.pi) - math.lgamma(s)
    return math.exp(log_pref + (s - 1) * math.log(r)) * bessel_k(1 - s, 2 * r / math.sqrt(eta))


def fock_density_mixture(eta: float, sigma: float, r: float,
                         rel_tol: float = 1e-10, abs_tol: float = 1e-14) -> float:
    """
    混合表示：(1/(πΓ(σ/η))) (1/η)^{σ/η} ∫_0^∞ exp(−r²/t − t/η) t^{σ/η−2} dt

    Raises:
        DomainError: r ≤ 0
        ConvergenceError: 积分未达到容差
    """
    if not r > 0:
        raise DomainError(f"fock_density_mixture 要求 r > 0，收到 r={r}")
    s = sigma / eta
    r2 = r * r
    # 被积函数峰值附近作为分点
    peak = 0.5 * eta * ((s - 2) + math.sqrt((s - 2) ** 2 + 4 * r2 / eta))
    peak = max(peak, 1e-12)
    log_peak = -r2 / peak - peak / eta + (s - 2) * math.log(peak)

    def g(t):
        if t <= 0:
            return 0.0
        return math.exp(-r2 / t - t / eta + (s - 2) * math.log(t) - log_peak)

    head, err_head = integrate.quad(g, 0, peak, epsabs=abs_tol, epsrel=rel_tol, limit=200)
    tail, err_tail = integrate.quad(g, peak, math.inf, epsabs=abs_tol, epsrel=rel_tol, limit=200)
    total = head + tail
    if err_head + err_tail > max(abs_tol, rel_tol * abs(total)) * 1e3:
        raise ConvergenceError(
            f"Λ 混合积分未收敛 (r={r})", best_estimate=total, error_estimate=err_head + err_tail)
    log_pref = -math.log(math.pi) - math.lgamma(s) - s * math.log(eta)
    return total * math.exp(log_pref + log_peak)
