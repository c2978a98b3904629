"""
Fock 空间 𝔽_{η,σ} 与中间空间 𝓕_{α,β,σ}

两者都以权重 n!(σ|−η)_n 定义内积，区别只在基（zⁿ 与 (z|β)_n）。
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import factorial
from typing import List, Sequence, Tuple

import numpy as np

from core.combinat import GaussRational, genfact
from core.errors import ConvergenceError, DomainError
from core.measures import csum
from core.sheffer import Basis, ExactPoly, MeixnerParams, complex_coeffs, require_basis
from core.transforms.series import TERM_CAP, SeriesEval, geometric_tail, power_weights_series


def coherent_weight(eta, sigma, n: int):
    """
    n!(σ|−η)_n

    η、σ 为 GaussRational 时精确；η=1, σ=2j 给出 Barut–Girardello 权重 n!(2j)^{(n)}。
    """
    if n < 0:
        raise DomainError(f"coherent_weight: n={n} 必须非负")
    return genfact(sigma, -eta, n) * factorial(n)


def _float_weights(eta: float, sigma: float, count: int) -> List[float]:
    weights = [1.0]
    for n in range(1, count):
        weights.append(weights[-1] * n * (sigma + eta * (n - 1)))
    return weights[:count]


@dataclass(frozen=True)
class FockElement:
    """
    𝔽_{η,σ} 中的截断元素 Σ_{n<N} f_n zⁿ

    tail_bound 是被截掉部分范数的上界（有限多项式为 0）。
    """
    coeffs: Tuple[complex, ...]
    eta: float
    sigma: float
    tail_bound: float = 0.0
    weights: Tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.eta < 0 or self.sigma <= 0:
            raise DomainError(f"𝔽_(η,σ) 要求 η ≥ 0, σ > 0，收到 η={self.eta}, σ={self.sigma}")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        object.__setattr__(self, "weights", tuple(_float_weights(self.eta, self.sigma, len(self.coeffs))))

    @classmethod
    def from_poly(cls, p: ExactPoly, eta: float, sigma: float) -> FockElement:
        """单项式基的精确多项式"""
        require_basis(p, Basis.MONOMIAL, "FockElement")
        return cls(tuple(complex_coeffs(p)), eta, sigma)

    def __call__(self, z: complex) -> complex:
        return power_weights_series(self.coeffs, z)

    def norm_squared(self) -> float:
        return math.fsum(abs(c) ** 2 * w for c, w in zip(self.coeffs, self.weights))

    def to_dict(self) -> dict:
        return {
            'coeffs': [[c.real, c.imag] for c in self.coeffs],
            'eta': self.eta,
            'sigma': self.sigma,
            'tail_bound': self.tail_bound,
        }


def fock_inner(phi: FockElement, psi: FockElement) -> complex:
    """
    Σ f_n conj(g_n) n!(σ|−η)_n

    Raises:
        DomainError: 两个元素的 (η, σ) 不同
    """
    if (phi.eta, phi.sigma) != (psi.eta, psi.sigma):
        raise DomainError(
            f"(η,σ) 不一致: ({phi.eta}, {phi.sigma}) 与 ({psi.eta}, {psi.sigma})")
    n = min(len(phi.coeffs), len(psi.coeffs))
    return csum(phi.coeffs[k] * psi.coeffs[k].conjugate() * phi.weights[k] for k in range(n))


def fock_kernel(eta: float, sigma: float, z: complex, w: complex, tol: float = 1e-12) -> SeriesEval:
    """
    𝕂(z,w) = Σ (conj(z)w)ⁿ / (n!(σ|−η)_n)

    相邻项比 |conj(z)w| / ((n+1)(σ+ηn)) 随 n 单调递减，一旦小于 1，
    |t_N|·q/(1−q) 就是截断误差的严格上界。
    """
    if eta < 0 or sigma <= 0:
        raise DomainError(f"𝕂 要求 η ≥ 0, σ > 0，收到 η={eta}, σ={sigma}")
    u = complex(z).conjugate() * complex(w)
    terms = [1 + 0j]
    t = 1 + 0j
    for n in range(TERM_CAP):
        t = t * u / ((n + 1) * (sigma + eta * n))
        terms.append(t)
        q = abs(u) / ((n + 2) * (sigma + eta * (n + 1)))
        if q >= 1:
            continue
        tail = geometric_tail(abs(t), q)
        total = csum(terms)
        if tail <= tol * max(abs(total), 1e-30):
            return SeriesEval(total, len(terms), tail)
    raise ConvergenceError(f"𝕂({z}, {w}) 在 {TERM_CAP} 项内未收敛", best_estimate=csum(terms))


def kernel_section(eta: float, sigma: float, z: complex, n_terms: int) -> FockElement:
    """𝕂(z,·) 的前 n_terms 项：系数 conj(z)ⁿ / (n!(σ|−η)_n)，附带尾部范数上界"""
    zc = complex(z).conjugate()
    weights = _float_weights(eta, sigma, n_terms + 1)
    coeffs = [zc ** n / weights[n] for n in range(n_terms)]
    # ‖尾部‖² = Σ_{n≥N} |z|^{2n}/w_n，比值 |z|²/((n+1)(σ+ηn)) 单调递减
    first = abs(zc) ** (2 * n_terms) / weights[n_terms]
    q = abs(zc) ** 2 / ((n_terms + 1) * (sigma + eta * n_terms))
    tail = math.sqrt(first + geometric_tail(first, q)) if q < 1 else math.inf
    return FockElement(tuple(coeffs), eta, sigma, tail)


def kernel_gram(eta: float, sigma: float, points: Sequence[complex], tol: float = 1e-12) -> np.ndarray:
    """[𝕂(z_i, z_j)]"""
    k = len(points)
    gram = np.empty((k, k), dtype=complex)
    for i, zi in enumerate(points):
        for j, zj in enumerate(points):
            gram[i, j] = fock_kernel(eta, sigma, zi, zj, tol).value
    return gram


def kernel_min_eigenvalue(gram: np.ndarray) -> Tuple[float, float]:
    """(Hermite 偏差, 对称化后的最小特征值)"""
    hermitian_gap = float(np.max(np.abs(gram - gram.conj().T)))
    eigs = np.linalg.eigvalsh(0.5 * (gram + gram.conj().T))
    return hermitian_gap, float(eigs.min())


def curly_f_inner(params: MeixnerParams, phi, psi) -> complex:
    """
    𝓕_{α,β,σ} 内积 Σ f_n conj(g_n) n!(σ|−η)_n

    phi、psi 为下降 β 阶乘基的 ExactPoly，或直接给出系数序列。
    """
    f = _falling_coeffs(phi)
    g = _falling_coeffs(psi)
    weights = _float_weights(params.eta_f, params.sigma_f, min(len(f), len(g)))
    return csum(f[k] * g[k].conjugate() * weights[k] for k in range(len(weights)))


def _falling_coeffs(value) -> List[complex]:
    if isinstance(value, ExactPoly):
        require_basis(value, Basis.FALLING_BETA, "𝓕 内积")
        return complex_coeffs(value)
    return [complex(c) for c in value]


def exact_fock_norm(p: ExactPoly, eta: GaussRational, sigma: GaussRational) -> GaussRational:
    """Σ |f_n|² n!(σ|−η)_n 的精确值（任意基的系数按同一权重）"""
    acc = GaussRational.zero()
    for n, c in enumerate(p.coeffs):
        if c:
            acc = acc + coherent_weight(eta, sigma, n) * c.abs2()
    return acc