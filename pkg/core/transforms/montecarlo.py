"""
随机测度 ρ 的 Monte Carlo 估计（Laguerre 类）

ξ ~ Poisson(z/β)，再 x ~ Gamma(形状 (ηξ+σ)/η, 尺度 α)，f(x) 的样本均值估计 (𝕊f)(z)。
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from core.errors import DomainError
from core.sheffer import ExactPoly, MeixnerClass, MeixnerParams, complex_coeffs, to_monomial
from core.utils.logger import logger


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int

    def within(self, target: float, sigmas: float = 3.0) -> bool:
        return abs(self.mean - target) <= sigmas * self.stderr

    def to_dict(self) -> dict:
        return {'mean': self.mean, 'stderr': self.stderr, 'samples': self.samples, 'seed': self.seed}


def monte_carlo_S(params: MeixnerParams, f: ExactPoly, z: float,
                  samples: int = 1_000_000, seed: int = 0, batch: int = 200_000) -> MonteCarloEstimate:
    """
    Raises:
        DomainError: 非 Laguerre 类、z 非正实数或样本数不足
    """
    if params.family is not MeixnerClass.LAGUERRE:
        raise DomainError(f"monte_carlo_S 仅支持 Laguerre 类，收到 {params.family.value}")
    if isinstance(z, complex):
        if z.imag != 0:
            raise DomainError(f"monte_carlo_S 要求 z > 0，收到 z={z}")
        z = z.real
    if z <= 0:
        raise DomainError(f"monte_carlo_S 要求 z > 0，收到 z={z}")
    if samples < 2:
        raise DomainError(f"样本数至少为 2，收到 {samples}")

    alpha, beta = params.alpha_c.real, params.beta_c.real
    eta, sigma = params.eta_f, params.sigma_f
    # 单项式系数，升幂；np.polyval 需要降幂
    coeffs = [c.real for c in complex_coeffs(to_monomial(params, f))][::-1] or [0.0]
    rng = np.random.default_rng(seed)

    total, total_sq, done = 0.0, 0.0, 0
    while done < samples:
        size = min(batch, samples - done)
        xi = rng.poisson(z / beta, size)
        x = rng.gamma((eta * xi + sigma) / eta, alpha)
        values = np.polyval(coeffs, x)
        total += float(values.sum())
        total_sq += float(np.square(values).sum())
        done += size

    mean = total / samples
    variance = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    stderr = math.sqrt(variance / samples)
    logger.info(f"Monte Carlo (𝕊f)({z}) ≈ {mean:.6g} ± {stderr:.2g}，{samples} 样本，seed={seed}")
    return MonteCarloEstimate(mean, stderr, samples, seed)
