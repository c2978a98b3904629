"""
按测度分派的积分

- Gamma：广义 Gauss–Laguerre，节点数倍增；
- NegBinomial / Poisson：逐项递推的级数，比值检验截断；
- Meixner：截断到 [−X, X] 后用 QUADPACK 自适应积分实部与虚部；
- FockLambda：角向等距求和 × 径向 QUADPACK。

求和一律用 math.fsum（固定顺序的补偿求和），结果与求值顺序无关。
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Tuple

import numpy as np
from scipy import integrate as sp_integrate
from scipy import special

from core.errors import ConvergenceError, DomainError
from core.measures.density import fock_density, log_meixner_density
from core.measures.spec import MeasureKind, MeasureSpec, PolyBound, QuadConfig
from core.measures.special import complex_loggamma
from core.utils.logger import logger

Integrand = Callable[[complex], complex]

_MIN_NODES = 32
_RATIO_WINDOW = 3
_ZERO_RUN = 64
_ANGLES = 64


@dataclass(frozen=True)
class QuadResult:
    """积分值、误差估计与使用的节点（或项）数"""
    value: complex
    error: float
    nodes: int

    def to_dict(self) -> dict:
        return {
            'value': [self.value.real, self.value.imag],
            'error': self.error,
            'nodes': self.nodes,
        }


def csum(values: Iterable[complex]) -> complex:
    """实部虚部分别 fsum"""
    values = [complex(v) for v in values]
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


# ==================== Gamma ====================

def _gamma_rule(spec: MeasureSpec, f: Integrand, n: int) -> complex:
    k = spec.shape
    a = k.real - 1
    t, w = special.roots_genlaguerre(n, a)
    log_norm = complex_loggamma(k)
    terms = []
    for ti, wi in zip(t, w):
        if wi == 0:
            continue
        phase = cmath.exp(1j * k.imag * math.log(ti) - log_norm)
        terms.append(wi * phase * f(spec.alpha.real * ti))
    return csum(terms)


def _integrate_gamma(spec: MeasureSpec, f: Integrand, cfg: QuadConfig) -> QuadResult:
    n = _MIN_NODES
    previous = _gamma_rule(spec, f, n)
    while 2 * n <= cfg.max_nodes:
        n *= 2
        current = _gamma_rule(spec, f, n)
        diff = abs(current - previous)
        if diff <= cfg.tolerance(current):
            logger.debug(f"Gamma 求积在 {n} 个节点收敛，差 {diff:.3e}")
            return QuadResult(current, diff, n)
        previous = current
    raise ConvergenceError(
        f"Gamma 求积在 max_nodes={cfg.max_nodes} 内未收敛", best_estimate=previous)


# ==================== 级数 ====================

def sum_series(terms: Iterator[Tuple[int, complex]], cfg: QuadConfig, what: str,
               start_check: float = 0.0,
               ratio_bound: Optional[Callable[[int], float]] = None) -> QuadResult:
    """
    对 (k, t_k) 流求和

    给出 ratio_bound 时，它须满足 j ≥ k ⇒ |t_{j+1}/t_j| ≤ ratio_bound(k)；
    ρ = ratio_bound(k) < 1 且 |t_k|·ρ/(1−ρ) 低于容差即截断，尾部上界可证。

    否则退回观测比值：k > start_check 后最近几项的比值 q<1 且 |t_N|·q/(1−q) 低于容差，
    并且继续求和到 2N 仍满足同一条件才截断（被积函数在根附近的凹陷会让观测比值暂时偏小）。
    项数超过 cfg.max_nodes 抛 ConvergenceError。
    """
    kept = []
    recent = []
    confirm_at = None
    for k, t in terms:
        kept.append(t)
        recent.append(abs(t))
        if len(recent) > _RATIO_WINDOW + 1:
            recent.pop(0)
        if len(kept) >= cfg.max_nodes:
            raise ConvergenceError(
                f"{what} 在 {cfg.max_nodes} 项内未收敛", best_estimate=csum(kept))

        if ratio_bound is not None:
            rho = ratio_bound(k)
            if rho >= 1:
                continue
            tail = abs(t) * rho / (1 - rho)
            total = csum(kept)
            if tail <= cfg.tolerance(total):
                logger.debug(f"{what}: {len(kept)} 项截断，可证尾部上界 {tail:.3e}")
                return QuadResult(total, tail, len(kept))
            continue

        if k <= start_check or len(recent) <= _RATIO_WINDOW:
            continue
        if not any(recent):
            # 连续零项：多项式在低阶格点上为零时会出现，只在远离起点后才视为收敛
            if k > start_check + _ZERO_RUN:
                return QuadResult(csum(kept), 0.0, len(kept))
            continue
        ratios = [recent[i + 1] / recent[i] for i in range(_RATIO_WINDOW) if recent[i] > 0]
        q = max(ratios) if ratios else 1.0
        if q >= 1:
            confirm_at = None
            continue
        tail = recent[-1] * q / (1 - q)
        total = csum(kept)
        if tail > cfg.tolerance(total):
            continue
        if confirm_at is None:
            confirm_at = 2 * k + _RATIO_WINDOW
            continue
        if k >= confirm_at:
            logger.debug(f"{what}: {len(kept)} 项截断，观测尾部估计 {tail:.3e}（未认证）")
            return QuadResult(total, tail, len(kept))
    return QuadResult(csum(kept), 0.0, len(kept))


def _neg_binomial_terms(spec: MeasureSpec, f: Integrand) -> Iterator[Tuple[int, complex]]:
    p = (spec.beta / spec.alpha).real
    k = spec.shape
    step = (spec.alpha - spec.beta).real
    w = cmath.exp(k * math.log1p(-p))
    n = 0
    while True:
        yield n, w * f(step * n)
        w = w * p * (k + n) / (n + 1)
        n += 1


def poisson_terms(zeta: complex, f: Callable[[int], complex]) -> Iterator[Tuple[int, complex]]:
    """e^{−ζ}ζᵏ/k! · f(k)，权重逐项递推"""
    zeta = complex(zeta)
    w = cmath.exp(-zeta)
    k = 0
    while True:
        yield k, w * f(k)
        w = w * zeta / (k + 1)
        k += 1


def poisson_expect(zeta: complex, f: Callable[[int], complex],
                   cfg: QuadConfig = QuadConfig(),
                   bound: Optional[PolyBound] = None) -> QuadResult:
    """
    ∫ f dπ_ζ = e^{−ζ} Σ ζᵏ f(k)/k!

    f 为多项式时传入 bound：比值上界 |ζ|/(k+1)·((k−R+1)/(k−R))^d 单调下降，截断可证。
    不传时比值检验只在 k > |ζ| 之后启用（此前 Poisson 权重仍在增长）。
    """
    zeta = complex(zeta)
    if zeta == 0:
        return QuadResult(complex(f(0)), 0.0, 1)
    ratio_bound = None
    if bound is not None:
        size = abs(zeta)
        ratio_bound = lambda k: size / (k + 1) * bound.ratio(k)
    return sum_series(poisson_terms(zeta, f), cfg, f"Poisson(ζ={zeta})",
                      start_check=abs(zeta), ratio_bound=ratio_bound)


def _integrate_neg_binomial(spec: MeasureSpec, f: Integrand, cfg: QuadConfig,
                            bound: Optional[PolyBound] = None) -> QuadResult:
    p = (spec.beta / spec.alpha).real
    k = abs(spec.shape)
    # 权重比 p(k+n)/(n+1) 在 n > (pk−1)/(1−p) 后小于 1
    mode = max(0.0, (p * k - 1) / (1 - p))
    ratio_bound = None
    if bound is not None:
        # 格点 x = (α−β)n；j ≥ n 时权重比不超过 p·max(1, (|k|+n)/(n+1))
        on_index = bound.scaled((spec.alpha - spec.beta).real)
        ratio_bound = lambda n: p * max(1.0, (k + n) / (n + 1)) * on_index.ratio(n)
    return sum_series(_neg_binomial_terms(spec, f), cfg, "负二项级数",
                      start_check=mode, ratio_bound=ratio_bound)


# ==================== Meixner ====================

def _log_abs(value: complex) -> float:
    a = abs(value)
    return math.log(a) if a > 0 else -math.inf


def meixner_window(spec: MeasureSpec, f: Integrand, cfg: QuadConfig) -> float:
    """
    选取 X 使得 |f·密度| 在 ±X 处比峰值低 tail_cutoff，且在 1.5X 处继续下降

    密度尾部为 e^{−Arg(α)|x|/Im α} 乘多项式，f 为多项式时乘积最终单调下降。
    """
    scale = spec.alpha.imag * (1 + abs(spec.shape))
    grid = np.linspace(-10 * scale, 10 * scale, 201)
    log_peak = max(log_meixner_density(spec, float(x)).real + _log_abs(f(float(x))) for x in grid)

    def log_mass(x: float) -> float:
        return log_meixner_density(spec, x).real + _log_abs(f(x))

    threshold = log_peak - cfg.tail_cutoff
    x_max = 10 * scale
    for _ in range(60):
        edges = (x_max, -x_max, 1.5 * x_max, -1.5 * x_max)
        if all(log_mass(e) < threshold for e in edges):
            logger.debug(f"Meixner 窗口 X={x_max:.4g}")
            return x_max
        x_max *= 1.5
    raise ConvergenceError(f"Meixner 窗口选取失败（X 超过 {x_max:.3g}）")


def _quad_complex(g: Callable[[float], complex], a: float, b: float, cfg: QuadConfig,
                  what: str) -> QuadResult:
    limit = max(50, cfg.max_nodes // 21)
    pieces, errors, messages = [], [], []
    nodes = 0
    for part in (lambda x: g(x).real, lambda x: g(x).imag):
        out = sp_integrate.quad(part, a, b, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
                                limit=limit, full_output=1)
        pieces.append(out[0])
        errors.append(out[1])
        nodes += out[2]['neval']
        # ier>0 时 QUADPACK 附带第四个返回值
        if len(out) > 3:
            messages.append(str(out[3]).strip())
    value = complex(pieces[0], pieces[1])
    error = math.hypot(*errors)
    if messages and error > cfg.tolerance(value) * 1e3:
        raise ConvergenceError(f"{what} 自适应积分未收敛: {messages[0]}",
                               best_estimate=value, error_estimate=error)
    return QuadResult(value, error, nodes)


def _integrate_meixner(spec: MeasureSpec, f: Integrand, cfg: QuadConfig) -> QuadResult:
    x_max = meixner_window(spec, f, cfg)

    def g(x: float) -> complex:
        return f(x) * cmath.exp(log_meixner_density(spec, x))

    return _quad_complex(g, -x_max, x_max, cfg, "Meixner 测度")


# ==================== Fock ====================

def radial_upper(eta: float, sigma: float, growth: float, cfg: QuadConfig) -> float:
    """
    径向截断半径

    大 r 时 rΛ(r)·r^{growth} ~ r^{p} e^{−2r/√η}，p = σ/η − 1/2 + growth；
    取对数值比其峰值低 tail_cutoff 的第一个 r（r 按 1.5 倍增长）。
    """
    p = sigma / eta - 0.5 + growth
    root = math.sqrt(eta)

    def log_tail(r: float) -> float:
        return p * math.log(r) - 2 * r / root

    r_star = max(p * root / 2, root)
    log_ref = log_tail(r_star)
    r = r_star
    while log_tail(r) >= log_ref - cfg.tail_cutoff:
        r *= 1.5
    logger.debug(f"径向截断 R={r:.4g} (η={eta}, σ={sigma}, growth={growth})")
    return r


def integrate_radial(eta: float, sigma: float, g: Callable[[float], complex],
                     cfg: QuadConfig = QuadConfig(), growth: float = 0.0) -> QuadResult:
    """
    2π ∫_0^∞ g(r) Λ_{η,σ}(r) r dr

    growth 为 g 的多项式增长阶，用于确定截断半径。
    """
    upper = radial_upper(eta, sigma, growth, cfg)

    def h(r: float) -> complex:
        if r <= 0:
            return 0j
        return complex(g(r)) * fock_density(eta, sigma, r) * r

    result = _quad_complex(h, 0.0, upper, cfg, "径向积分")
    return QuadResult(2 * math.pi * result.value, 2 * math.pi * result.error, result.nodes)


def _integrate_fock(spec: MeasureSpec, f: Integrand, cfg: QuadConfig) -> QuadResult:
    """角向 64 点等距求和（对次数 < 64 的三角多项式精确）后做径向积分"""
    theta = 2 * math.pi * np.arange(_ANGLES) / _ANGLES
    units = np.exp(1j * theta)

    def angular_mean(r: float) -> complex:
        return csum(f(r * u) for u in units) / _ANGLES

    return integrate_radial(spec.eta, spec.sigma, angular_mean, cfg, growth=10.0)


# ==================== 入口 ====================

def integrate(spec: MeasureSpec, f: Integrand, cfg: QuadConfig = QuadConfig(),
              bound: Optional[PolyBound] = None) -> QuadResult:
    """
    ∫ f dμ

    Args:
        spec: 测度描述
        f: 支撑上的可调用对象，返回复数
        cfg: 容差与节点上限
        bound: f 为多项式时的次数与根界；格点测度据此给出可证的截断

    Returns:
        QuadResult: 积分值、误差估计、节点数

    Raises:
        ConvergenceError: 在 max_nodes 内未达到容差，携带最佳估计
    """
    kind = spec.kind
    if kind is MeasureKind.GAMMA:
        return _integrate_gamma(spec, f, cfg)
    if kind is MeasureKind.NEG_BINOMIAL:
        return _integrate_neg_binomial(spec, f, cfg, bound)
    if kind is MeasureKind.MEIXNER:
        return _integrate_meixner(spec, f, cfg)
    if kind is MeasureKind.POISSON_COMPLEX:
        return poisson_expect(spec.zeta, f, cfg, bound)
    if kind is MeasureKind.FOCK_LAMBDA:
        return _integrate_fock(spec, f, cfg)
    raise DomainError(f"未知测度 {kind}")
