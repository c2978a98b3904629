"""
Meixner 类参数
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from core.combinat import GaussRational, gr
from core.errors import DomainError


class MeixnerClass(Enum):
    """η>0 的三个正交 Sheffer 族"""
    LAGUERRE = "Laguerre"
    MEIXNER_FIRST = "MeixnerFirst"
    MEIXNER_SECOND = "MeixnerSecond"

    @classmethod
    def from_name(cls, name: str) -> MeixnerClass:
        for member in cls:
            if member.value.lower() == name.lower() or member.name.lower() == name.lower():
                return member
        raise DomainError(f"未知的 Meixner 类: {name!r}")


@dataclass(frozen=True)
class MeixnerParams:
    """
    校验过的 (α, β, σ, 类别)

    派生量 λ=α+β、η=αβ 为实数；l=σ/α（Laguerre、Meixner-I）或 0（Meixner-II）。
    """
    alpha: GaussRational
    beta: GaussRational
    sigma: GaussRational
    family: MeixnerClass

    @property
    def lam(self) -> GaussRational:
        return self.alpha + self.beta

    @property
    def eta(self) -> GaussRational:
        return self.alpha * self.beta

    @property
    def sigma_over_alpha(self) -> GaussRational:
        return self.sigma / self.alpha

    @property
    def ell(self) -> GaussRational:
        if self.family is MeixnerClass.MEIXNER_SECOND:
            return GaussRational.zero()
        return self.sigma_over_alpha

    @property
    def shift(self) -> GaussRational:
        """s_n(x) = p_n(x + shift)；仅 Meixner-II 非零"""
        if self.family is MeixnerClass.MEIXNER_SECOND:
            return self.sigma_over_alpha
        return GaussRational.zero()

    @property
    def is_meixner_second(self) -> bool:
        return self.family is MeixnerClass.MEIXNER_SECOND

    # 浮点视图，供数值层使用
    @property
    def alpha_c(self) -> complex:
        return self.alpha.to_complex()

    @property
    def beta_c(self) -> complex:
        return self.beta.to_complex()

    @property
    def sigma_f(self) -> float:
        return float(self.sigma.re)

    @property
    def eta_f(self) -> float:
        return float(self.eta.re)

    @property
    def lam_f(self) -> float:
        return float(self.lam.re)

    def to_dict(self) -> dict:
        return {
            'class': self.family.value,
            'alpha': str(self.alpha),
            'beta': str(self.beta),
            'sigma': str(self.sigma),
            'lambda': str(self.lam),
            'eta': str(self.eta),
            'l': str(self.ell),
        }

    def __str__(self):
        return f"{self.family.value}(α={self.alpha}, β={self.beta}, σ={self.sigma})"


ScalarLike = Union[GaussRational, int, Fraction, str]


def validate_params(alpha: ScalarLike, beta: ScalarLike, sigma: ScalarLike,
                    family: Union[MeixnerClass, str]) -> MeixnerParams:
    """
    校验参数并返回 MeixnerParams

    Raises:
        DomainError: σ ≤ 0 或违反类别约束
    """
    a, b, s = gr(alpha), gr(beta), gr(sigma)
    if isinstance(family, str):
        family = MeixnerClass.from_name(family)

    if not s.is_real or s.re <= 0:
        raise DomainError(f"σ 必须为正实数，收到 σ={s}")

    if family is MeixnerClass.LAGUERRE:
        if not (a.is_real and b.is_real and a == b and a.re > 0):
            raise DomainError(f"Laguerre 类要求 α=β>0 且为实数，收到 α={a}, β={b}")
    elif family is MeixnerClass.MEIXNER_FIRST:
        if not (a.is_real and b.is_real and a.re > b.re > 0):
            raise DomainError(f"Meixner-I 类要求 α>β>0 且为实数，收到 α={a}, β={b}")
    else:
        if a.im <= 0:
            raise DomainError(f"Meixner-II 类要求 Im(α)>0，收到 α={a}")
        if a.re < 0:
            raise DomainError(f"Meixner-II 类要求 Re(α)≥0，收到 α={a}")
        if b != a.conjugate():
            raise DomainError(f"Meixner-II 类要求 β = conj(α)，收到 α={a}, β={b}")

    return MeixnerParams(alpha=a, beta=b, sigma=s, family=family)


# 参考参数集
LAGUERRE_REF = validate_params(1, 1, 1, MeixnerClass.LAGUERRE)
MEIXNER_FIRST_REF = validate_params(2, 1, 2, MeixnerClass.MEIXNER_FIRST)
MEIXNER_SECOND_REF = validate_params("1+i", "1-i", 1, MeixnerClass.MEIXNER_SECOND)
REFERENCE_PARAMS = (LAGUERRE_REF, MEIXNER_FIRST_REF, MEIXNER_SECOND_REF)
