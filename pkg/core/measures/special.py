"""
特殊函数

复 Γ 函数（Lanczos g=7，Re(z)<1/2 时用反射公式）与第二类修正 Bessel 函数 K_θ。
"""
from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special

from core.errors import ConvergenceError, DomainError
from core.utils.logger import logger

_LANCZOS_G = 7
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _check_pole(z: complex):
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise DomainError(f"Γ 在非正整数处有极点: z={z.real:g}")


def _lanczos_log(z: complex) -> complex:
    """Re(z) ≥ 1/2 时的 log Γ(z)"""
    z -= 1
    x = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        x += _LANCZOS_P[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def _log_sin_pi(z: complex) -> complex:
    """log sin(πz)；|Im z| 大时按指数形式展开，避免 sin 溢出"""
    if abs(z.imag) < 20:
        return cmath.log(cmath.sin(math.pi * z))
    if z.imag > 0:
        return -1j * math.pi * z + cmath.log(1 - cmath.exp(2j * math.pi * z)) + cmath.log(0.5j)
    return 1j * math.pi * z + cmath.log(1 - cmath.exp(-2j * math.pi * z)) + cmath.log(-0.5j)


def complex_loggamma(z: complex) -> complex:
    """
    log Γ(z)（分支不保证为主值，仅用于取指数）

    Raises:
        DomainError: z 为非正整数
    """
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        return math.log(math.pi) - _log_sin_pi(z) - _lanczos_log(1 - z)
    return _lanczos_log(z)


def complex_gamma(z: complex) -> complex:
    """
    Γ(z)，|z| ≤ 50 时至少 12 位有效数字

    Raises:
        DomainError: z 为非正整数
    """
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1 - z))
    return cmath.exp(_lanczos_log(z))


# ==================== Bessel K ====================

_TAIL_LOG_DROP = 40.0


def bessel_k(theta: float, x: float, rel_tol: float = 1e-13, max_halvings: int = 14) -> float:
    """
    K_θ(x) = ∫_0^∞ e^{−x cosh t} cosh(θt) dt

    被积函数偶且解析，梯形公式指数收敛；截断点取在被积函数比峰值低 e^{−40} 处，
    步长逐次减半直到相对变化小于 rel_tol。

    Raises:
        DomainError: x ≤ 0
        ConvergenceError: 减半次数用尽
    """
    if not x > 0:
        raise DomainError(f"bessel_k 要求 x > 0，收到 x={x}")
    nu = abs(float(theta))
    x = float(x)

    t_star = math.asinh(nu / x)
    log_peak = -x * (math.cosh(t_star) - 1.0) + nu * t_star

    def log_g(t):
        return -x * (np.cosh(t) - 1.0) + nu * t

    upper = max(1.0, 2.0 * t_star)
    while log_g(upper) > log_peak - _TAIL_LOG_DROP:
        upper *= 1.5

    def trapezoid(n: int) -> float:
        t = np.linspace(0.0, upper, n + 1)
        g = np.exp(log_g(t) - log_peak) * 0.5 * (1.0 + np.exp(-2.0 * nu * t))
        h = upper / n
        return h * (math.fsum(g) - 0.5 * g[0] - 0.5 * g[-1])

    n = 32
    previous = trapezoid(n)
    for _ in range(max_halvings):
        n *= 2
        current = trapezoid(n)
        if abs(current - previous) <= rel_tol * abs(current):
            return current * math.exp(log_peak - x)
        previous = current
    raise ConvergenceError(
        f"bessel_k({theta}, {x}) 梯形公式未收敛",
        best_estimate=previous * math.exp(log_peak - x),
    )


def _bessel_i_series(nu: float, x: float) -> float:
    """I_ν(x) 的幂级数；ν 为负整数时 1/Γ 的零点自动消去发散项"""
    half = 0.5 * x
    total, k = 0.0, 0
    while True:
        term = half ** (2 * k + nu) * special.rgamma(k + nu + 1) / math.factorial(k)
        total += term
        if k > x and abs(term) <= 1e-17 * abs(total):
            return total
        k += 1
        if k > 500:
            raise ConvergenceError(f"I_{nu}({x}) 级数未收敛", best_estimate=total)


def bessel_k_series(theta: float, x: float) -> float:
    """
    级数路径（交叉检验用）

    非整数阶：K_θ = π(I_{−θ} − I_θ)/(2 sin θπ)；
    整数阶 n 用极限形式
    K_n = ½(x/2)^{−n} Σ_{k<n} (n−k−1)!/k! (−x²/4)^k + (−1)^{n+1} ln(x/2) I_n
          + (−1)^n ½ (x/2)^n Σ_k [ψ(k+1) + ψ(n+k+1)] (x²/4)^k / (k!(n+k)!)。
    x 较大时有抵消，只适合中小自变量。
    """
    if not x > 0:
        raise DomainError(f"bessel_k_series 要求 x > 0，收到 x={x}")
    nu = abs(float(theta))
    n = round(nu)
    if abs(nu - n) > 1e-12:
        return math.pi * (_bessel_i_series(-nu, x) - _bessel_i_series(nu, x)) / (2 * math.sin(nu * math.pi))

    half = 0.5 * x
    q = half * half
    head = 0.0
    for k in range(n):
        head += math.factorial(n - k - 1) / math.factorial(k) * (-q) ** k
    head *= 0.5 * half ** (-n)

    tail, k = 0.0, 0
    while True:
        term = (special.digamma(k + 1) + special.digamma(n + k + 1)) * q ** k / (
            math.factorial(k) * math.factorial(n + k))
        tail += term
        if k > x and abs(term) <= 1e-17 * abs(tail):
            break
        k += 1
        if k > 500:
            raise ConvergenceError(f"K_{n}({x}) 级数未收敛", best_estimate=tail)
    tail *= (-1) ** n * 0.5 * half ** n

    value = head + (-1) ** (n + 1) * math.log(half) * _bessel_i_series(n, x) + tail
    logger.debug(f"bessel_k_series: K_{n}({x}) = {value}")
    return value
