"""
带尾部上界的级数求值

相干态类级数 Σ c_n s_n(x) / (n!(σ|−η)_n) 在缩放变量 v_n 上递推，避免阶乘溢出：
    v_{n+1} = (γ_n A_n v_n − γ_n γ_{n−1} v_{n−1}) / ((n+1)(σ+ηn))
其中 γ_n = c_{n+1}/c_n，A_n = x − λn − l。|v_n| 的上界 m_n 用同一递推的绝对值形式得到。
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from core.errors import ConvergenceError
from core.measures import csum
from core.sheffer import MeixnerParams

TERM_CAP = 5000
_TINY = 1e-30


@dataclass(frozen=True)
class SeriesEval:
    """截断级数的值、使用项数与截断误差上界"""
    value: complex
    terms_used: int
    tail_bound: float

    def to_dict(self) -> dict:
        return {
            'value': [self.value.real, self.value.imag],
            'terms_used': self.terms_used,
            'tail_bound': self.tail_bound,
        }


def coherent_series(params: MeixnerParams, x: complex, gamma: Callable[[int], complex],
                    tol: float, what: str, majorant: bool = True) -> SeriesEval:
    """
    Σ_n c_n s_n(x) / (n!(σ|−η)_n)，c_0 = 1，c_{n+1} = gamma(n)·c_n

    当 q = m_n/m_{n−1} < 1/2 且几何尾部 m_n·q/(1−q) 不超过 tol·|和| 时停止。
    majorant=False 时改用最近三项的观测比值（上界不再有保证，用于 (z|β)_n 这类
    靠抵消收敛的级数）。

    Raises:
        ConvergenceError: TERM_CAP 项内未达到 tol
    """
    x = complex(x)
    lam = params.lam.to_complex()
    ell = params.ell.to_complex()
    sigma = params.sigma_f
    eta = params.eta_f
    abs_x, abs_lam, abs_ell = abs(x), abs(lam), abs(ell)

    terms = [1 + 0j]
    v_prev, v_cur = 0j, 1 + 0j
    m_prev, m_cur = 0.0, 1.0
    g_prev = 0j
    for n in range(TERM_CAP):
        g = complex(gamma(n))
        d = (n + 1) * (sigma + eta * n)
        a = x - lam * n - ell
        v_next = (g * a * v_cur - g * g_prev * v_prev) / d
        m_next = (abs(g) * (abs_x + abs_lam * n + abs_ell) * m_cur + abs(g * g_prev) * m_prev) / d
        terms.append(v_next)
        v_prev, v_cur = v_cur, v_next
        m_prev, m_cur = m_cur, m_next
        g_prev = g

        if m_cur == 0 and m_prev == 0:
            return SeriesEval(csum(terms), len(terms), 0.0)
        if majorant:
            if m_prev == 0:
                continue
            last, q = m_cur, m_cur / m_prev
        else:
            recent = [abs(t) for t in terms[-4:]]
            if len(recent) < 4 or not all(recent[:-1]):
                continue
            last, q = recent[-1], max(recent[i + 1] / recent[i] for i in range(3))
        if q < 0.5:
            tail = geometric_tail(last, q)
            total = csum(terms)
            if tail <= tol * max(abs(total), _TINY):
                return SeriesEval(total, len(terms), tail)
    raise ConvergenceError(f"{what} 在 {TERM_CAP} 项内未收敛", best_estimate=csum(terms))


def power_weights_series(coeffs, point: complex) -> complex:
    """Σ f_n pointⁿ（有限和，fsum）"""
    point = complex(point)
    acc = []
    power = 1 + 0j
    for c in coeffs:
        acc.append(complex(c) * power)
        power *= point
    return csum(acc)


def geometric_tail(last: float, ratio: float) -> float:
    """last·q/(1−q)，q ≥ 1 时返回 inf"""
    if ratio >= 1:
        return math.inf
    return last * ratio / (1 - ratio)
