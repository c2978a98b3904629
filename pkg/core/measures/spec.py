"""
测度描述与求积配置
"""
from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional, Sequence

from core.errors import DomainError
from core.sheffer import MeixnerClass, MeixnerParams


class MeasureKind(Enum):
    GAMMA = "Gamma"                      # μ_{α,α,ζ}，支撑 ℝ₊
    NEG_BINOMIAL = "NegBinomial"         # μ_{α,β,ζ}，支撑 (α−β)ℕ₀
    MEIXNER = "Meixner"                  # μ_{α,ᾱ,ζ}，支撑 ℝ
    POISSON_COMPLEX = "PoissonComplex"   # π_ζ，支撑 ℕ₀
    FOCK_LAMBDA = "FockLambda"           # λ_{η,σ}，支撑 ℂ


def frak_d_contains(alpha: complex, beta: complex, zeta: complex) -> bool:
    """
    ζ ∈ 𝔇_{α,β}

    α>β>0 时为整个 ℂ；Laguerre 与 Re(α)=0 的 Meixner-II 为 Re ζ > 0；
    Re(α)>0 的 Meixner-II 另需 |Im ζ| < Re ζ·Im α/Re α。
    """
    alpha, beta, zeta = complex(alpha), complex(beta), complex(zeta)
    if alpha.imag == 0 and beta.imag == 0 and alpha.real > beta.real:
        return True
    if zeta.real <= 0:
        return False
    if alpha.imag > 0 and alpha.real > 0:
        return abs(zeta.imag) < zeta.real * alpha.imag / alpha.real
    return True


def principal_arg(alpha: complex) -> float:
    """Arg(α) ∈ (0, π/2]（Im α > 0, Re α ≥ 0）"""
    return cmath.phase(complex(alpha))


@dataclass(frozen=True)
class MeasureSpec:
    """带标签的测度描述；通过工厂方法构造时即校验 ζ 的有效域"""
    kind: MeasureKind
    alpha: complex = 0j
    beta: complex = 0j
    zeta: complex = 0j
    eta: float = 0.0
    sigma: float = 0.0

    # ==================== 工厂 ====================

    @classmethod
    def gamma(cls, alpha: float, zeta: complex) -> MeasureSpec:
        return cls(MeasureKind.GAMMA, complex(alpha), complex(alpha), complex(zeta)).validated()

    @classmethod
    def neg_binomial(cls, alpha: float, beta: float, zeta: complex) -> MeasureSpec:
        return cls(MeasureKind.NEG_BINOMIAL, complex(alpha), complex(beta), complex(zeta)).validated()

    @classmethod
    def meixner(cls, alpha: complex, zeta: complex) -> MeasureSpec:
        alpha = complex(alpha)
        return cls(MeasureKind.MEIXNER, alpha, alpha.conjugate(), complex(zeta)).validated()

    @classmethod
    def poisson(cls, zeta: complex) -> MeasureSpec:
        return cls(MeasureKind.POISSON_COMPLEX, zeta=complex(zeta)).validated()

    @classmethod
    def fock_lambda(cls, eta: float, sigma: float) -> MeasureSpec:
        return cls(MeasureKind.FOCK_LAMBDA, eta=float(eta), sigma=float(sigma)).validated()

    # ==================== 校验 ====================

    def validated(self) -> MeasureSpec:
        kind = self.kind
        if kind is MeasureKind.GAMMA:
            if self.alpha.imag != 0 or self.alpha.real <= 0:
                raise DomainError(f"Gamma 测度要求 α 为正实数，收到 α={self.alpha}")
            if self.zeta.real <= 0:
                raise DomainError(f"ζ={self.zeta} 不在 𝔇 内: Re(ζ) > 0 violated")
        elif kind is MeasureKind.NEG_BINOMIAL:
            if self.alpha.imag or self.beta.imag or not self.alpha.real > self.beta.real > 0:
                raise DomainError(f"负二项测度要求 α>β>0，收到 α={self.alpha}, β={self.beta}")
        elif kind is MeasureKind.MEIXNER:
            if self.alpha.imag <= 0 or self.alpha.real < 0:
                raise DomainError(f"Meixner 测度要求 Im α > 0 且 Re α ≥ 0，收到 α={self.alpha}")
            if self.zeta.real <= 0:
                raise DomainError(f"ζ={self.zeta} 不在 𝔇 内: Re(ζ) > 0 violated")
            if not frak_d_contains(self.alpha, self.beta, self.zeta):
                raise DomainError(
                    f"ζ={self.zeta} 不在 𝔇 内: |Im(ζ)| < Re(ζ)Im(α)/Re(α) violated")
        elif kind is MeasureKind.FOCK_LAMBDA:
            if not (self.eta > 0 and self.sigma > 0):
                raise DomainError(f"λ_(η,σ) 要求 η>0, σ>0，收到 η={self.eta}, σ={self.sigma}")
        return self

    @property
    def eta_value(self) -> float:
        """αβ（实数）"""
        if self.kind is MeasureKind.FOCK_LAMBDA:
            return self.eta
        return (self.alpha * self.beta).real

    @property
    def shape(self) -> complex:
        """ζ/η"""
        return self.zeta / self.eta_value

    def to_dict(self) -> dict:
        return {
            'kind': self.kind.value,
            'alpha': [self.alpha.real, self.alpha.imag],
            'beta': [self.beta.real, self.beta.imag],
            'zeta': [self.zeta.real, self.zeta.imag],
            'eta': self.eta,
            'sigma': self.sigma,
        }


def orthogonality_measure(params: MeixnerParams, zeta: Optional[complex] = None) -> MeasureSpec:
    """
    μ_{α,β,ζ}，ζ 缺省为 σ

    Laguerre → Gamma，Meixner-I → 负二项，Meixner-II → Meixner 分布。
    """
    zeta = complex(params.sigma_f if zeta is None else zeta)
    if params.family is MeixnerClass.LAGUERRE:
        return MeasureSpec.gamma(params.alpha_c.real, zeta)
    if params.family is MeixnerClass.MEIXNER_FIRST:
        return MeasureSpec.neg_binomial(params.alpha_c.real, params.beta_c.real, zeta)
    return MeasureSpec.meixner(params.alpha_c, zeta)


@dataclass(frozen=True)
class QuadConfig:
    """
    求积配置

    tail_cutoff 是各测度截断规则共用的对数余量：
    - Gamma：广义 Gauss–Laguerre 节点数从 32 起倍增，相邻两次之差在容差内即停；
    - NegBinomial / Poisson：多项式被积函数带 PolyBound 时按可证的比值上界截断，否则按观测比值截断并倍增确认；
    - Meixner：窗口 [−X, X] 取在 对数密度 比峰值低 tail_cutoff 处，并按 |f| 的增长外扩；
    - FockLambda：径向上限取在 2r/√η 超过 tail_cutoff 加多项式增长余量处。
    """
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_nodes: int = 4096
    tail_cutoff: float = 36.0

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError(f"容差必须为正: rel_tol={self.rel_tol}, abs_tol={self.abs_tol}")
        if self.max_nodes < 32:
            raise DomainError(f"max_nodes 至少为 32，收到 {self.max_nodes}")
        if not math.isfinite(self.tail_cutoff) or self.tail_cutoff <= 0:
            raise DomainError(f"tail_cutoff 必须为正，收到 {self.tail_cutoff}")

    def tolerance(self, value: complex) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))

    @classmethod
    def from_dict(cls, data: dict) -> QuadConfig:
        known = {k: data[k] for k in ('rel_tol', 'abs_tol', 'max_nodes', 'tail_cutoff') if k in data}
        return cls(**known)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PolyBound:
    """
    多项式被积函数的次数与根的模上界

    级数求和据此给出逐项比值的单调上界：k > R 时
    |f(k+1)/f(k)| ≤ ((k−R+1)/(k−R))^d，尾部因而可证。
    """
    degree: int
    root_bound: float = 0.0

    def __post_init__(self):
        if self.degree < 0:
            raise DomainError(f"PolyBound 次数必须非负，收到 {self.degree}")
        if not (math.isfinite(self.root_bound) and self.root_bound >= 0):
            raise DomainError(f"PolyBound 根界必须为非负有限数，收到 {self.root_bound}")

    @classmethod
    def monomial(cls, degree: int) -> PolyBound:
        """xⁿ：根全在 0"""
        return cls(degree, 0.0)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex]) -> PolyBound:
        """
        升幂系数 → Fujiwara 根界

        |r| ≤ 2·max(|c_{d−1}/c_d|, |c_{d−2}/c_d|^{1/2}, …, |c_0/(2c_d)|^{1/d})
        """
        coeffs = [complex(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        d = len(coeffs) - 1
        if d <= 0:
            return cls(0, 0.0)
        lead = abs(coeffs[-1])
        radii = []
        for i in range(1, d + 1):
            c = abs(coeffs[d - i]) / lead
            if i == d:
                c /= 2
            radii.append(c ** (1.0 / i))
        return cls(d, 2 * max(radii))

    def shifted(self, offset: complex) -> PolyBound:
        """x ↦ f(x + offset)"""
        return PolyBound(self.degree, self.root_bound + abs(complex(offset)))

    def scaled(self, factor: complex) -> PolyBound:
        """k ↦ f(factor·k)，factor ≠ 0"""
        factor = abs(complex(factor))
        if factor == 0:
            raise DomainError("PolyBound.scaled 要求 factor ≠ 0")
        return PolyBound(self.degree, self.root_bound / factor)

    def times(self, other: PolyBound) -> PolyBound:
        return PolyBound(self.degree + other.degree, max(self.root_bound, other.root_bound))

    def squared_modulus(self) -> PolyBound:
        """实轴上的 |f(x)|² = f(x)·conj(f)(x)"""
        return PolyBound(2 * self.degree, self.root_bound)

    def ratio(self, k: float) -> float:
        """j ≥ k 时 |f(j+1)/f(j)| 的上界；k ≤ R 时为 inf"""
        if self.degree == 0:
            return 1.0
        gap = k - self.root_bound
        if gap <= 0:
            return math.inf
        return (1 + 1 / gap) ** self.degree
