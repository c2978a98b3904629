"""
数值层对照检验

每个函数返回 (数值结果, 精确目标) 或 (左端, 右端)，比较与容差判定交给调用方。
"""
from __future__ import annotations

import math
from math import factorial
from typing import Optional, Tuple

from scipy import integrate as sp_integrate

from core.combinat import GaussRational, genfact, stirling2
from core.errors import ConvergenceError, DomainError
from core.measures.density import fock_density, fock_density_mixture
from core.measures.quadrature import QuadResult, integrate, integrate_radial, poisson_expect
from core.measures.spec import MeasureSpec, PolyBound, QuadConfig, orthogonality_measure
from core.sheffer import MeixnerParams, complex_coeffs, evaluate, sheffer_poly


def norm_squared(params: MeixnerParams, n: int) -> GaussRational:
    """‖s_n‖² = n!(σ|−η)_n"""
    return genfact(params.sigma, -params.eta, n) * factorial(n)


def orthogonality_check(params: MeixnerParams, m: int, n: int,
                        cfg: QuadConfig = QuadConfig()) -> Tuple[complex, GaussRational]:
    """
    ∫ s_m s_n dμ_{α,β,σ} 与 δ_{mn} n!(σ|−η)_n

    Raises:
        ConvergenceError: 积分未收敛
    """
    if m < 0 or n < 0:
        raise DomainError(f"orthogonality_check: m={m}, n={n} 必须非负")
    spec = orthogonality_measure(params)
    s_m, s_n = sheffer_poly(params, m), sheffer_poly(params, n)
    bound = PolyBound.from_coeffs(complex_coeffs(s_m)).times(PolyBound.from_coeffs(complex_coeffs(s_n)))
    result = integrate(spec, lambda x: evaluate(s_m, x) * evaluate(s_n, x), cfg, bound)
    expected = norm_squared(params, n) if m == n else GaussRational.zero()
    return result.value, expected


def numeric_moment(params: MeixnerParams, n: int, cfg: QuadConfig = QuadConfig(),
                   zeta: Optional[complex] = None) -> QuadResult:
    """∫ xⁿ dμ_{α,β,ζ}（x 本身的矩，与 weylalg.raw_moments 对应）"""
    spec = orthogonality_measure(params, zeta)
    return integrate(spec, lambda x: complex(x) ** n, cfg, PolyBound.monomial(n))


def falling_moment_numeric(params: MeixnerParams, n: int,
                           cfg: QuadConfig = QuadConfig()) -> QuadResult:
    """
    ∫ (y|α−β)_n dμ，Meixner-II 取 y = x+σ/α

    精确目标为 βⁿ(σ/η)^{(n)}。
    """
    spec = orthogonality_measure(params)
    d = (params.alpha - params.beta).to_complex()
    shift = params.shift.to_complex()
    # 根为 −shift + j·d，j < n
    bound = PolyBound(n, abs(shift) + abs(d) * max(n - 1, 0))
    return integrate(spec, lambda x: genfact(complex(x) + shift, d, n), cfg, bound)


def fock_moment(eta: float, sigma: float, m: int, n: int,
                cfg: QuadConfig = QuadConfig()) -> complex:
    """
    ∫ z^m conj(z)^n dλ_{η,σ}

    在 ℂ 上做二维积分：角向等距求和，径向 QUADPACK；理论值 δ_{mn} n!(σ|−η)_n。
    """
    if m == n:
        # 角向平均恒为 r^{2n}
        MeasureSpec.fock_lambda(eta, sigma)  # 只做参数校验
        return integrate_radial(eta, sigma, lambda r: r ** (2 * n), cfg, growth=2 * n).value
    spec = MeasureSpec.fock_lambda(eta, sigma)
    return integrate(spec, lambda z: z ** m * complex(z).conjugate() ** n, cfg).value


def fock_density_paths(eta: float, sigma: float, r: float) -> Tuple[float, float]:
    """(Bessel 闭式, 混合积分) 两条路径"""
    return fock_density(eta, sigma, r), fock_density_mixture(eta, sigma, r)


def mellin_psi(sigma: float, r: float, cfg: QuadConfig = QuadConfig()) -> float:
    """ψ(r) = ∫_0^∞ e^{−r/t} e^{−t/σ} dt/t（f₁(t)=e^{−1/t}, f₂(t)=e^{−t/σ} 的 Mellin 卷积）"""
    peak = math.sqrt(r * sigma)

    def g(t: float) -> float:
        if t <= 0:
            return 0.0
        return math.exp(-r / t - t / sigma) / t

    head, e1 = sp_integrate.quad(g, 0, peak, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=200)
    tail, e2 = sp_integrate.quad(g, peak, math.inf, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=200)
    total = head + tail
    if e1 + e2 > cfg.tolerance(total) * 1e3:
        raise ConvergenceError(f"ψ({r}) 积分未收敛", best_estimate=total, error_estimate=e1 + e2)
    return total


def mellin_convolution_check(sigma: float, r: float,
                             cfg: QuadConfig = QuadConfig()) -> Tuple[float, float]:
    """
    ψ(r) 与 πσ·Λ_{σ,σ}(√r)

    Raises:
        DomainError: σ ≤ 0 或 r ≤ 0
    """
    if not (sigma > 0 and r > 0):
        raise DomainError(f"mellin_convolution_check 要求 σ>0, r>0，收到 σ={sigma}, r={r}")
    return mellin_psi(sigma, r, cfg), math.pi * sigma * fock_density(sigma, sigma, math.sqrt(r))


def poisson_falling_identity(zeta: complex, n: int,
                             cfg: QuadConfig = QuadConfig()) -> Tuple[complex, complex]:
    """(∫(ξ)_n dπ_ζ, ζⁿ)"""
    zeta = complex(zeta)
    return poisson_expect(zeta, lambda k: genfact(k, 1, n), cfg,
                          PolyBound(n, max(n - 1, 0))).value, zeta ** n


def touchard_moment(zeta: complex, n: int,
                    cfg: QuadConfig = QuadConfig()) -> Tuple[complex, complex]:
    """(∫ξⁿ dπ_ζ, Σ_k S(n,k)ζᵏ)"""
    zeta = complex(zeta)
    expected = sum(stirling2(n, k) * zeta ** k for k in range(n + 1))
    return poisson_expect(zeta, lambda k: k ** n, cfg, PolyBound.monomial(n)).value, expected
