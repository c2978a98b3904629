"""
定义域谓词 𝓓_{α,β,σ}、𝔇_{α,β}、Ψ_{α,β,σ}
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from core.errors import DomainError
from core.measures import frak_d_contains
from core.sheffer import MeixnerClass, MeixnerParams


class DomainKind(Enum):
    D_ABS = "D_abs"     # 𝓓：|α|=|β| 时 Re(αz) > −σ/2，α>β>0 时为 ℂ
    FRAK_D = "frakD"    # 𝔇：复参数测度 μ_{α,β,ζ} 的有效域
    PSI = "Psi"         # Ψ：αz+σ ∈ 𝔇

    @classmethod
    def from_name(cls, name: str) -> DomainKind:
        for member in cls:
            if member.value.lower() == name.lower():
                return member
        raise DomainError(f"未知的定义域: {name!r}")


def in_domain(which: DomainKind, z: complex, params: MeixnerParams) -> bool:
    """精确的集合隶属判定"""
    z = complex(z)
    alpha, beta = params.alpha_c, params.beta_c
    sigma = params.sigma_f
    if which is DomainKind.D_ABS:
        if params.family is MeixnerClass.MEIXNER_FIRST:
            return True
        return (alpha * z).real > -sigma / 2
    if which is DomainKind.FRAK_D:
        return frak_d_contains(alpha, beta, z)
    return frak_d_contains(alpha, beta, alpha * z + sigma)


_PREDICATES = {
    DomainKind.D_ABS: "Re(αz) > −σ/2",
    DomainKind.FRAK_D: "Re(z) > 0, |Im(z)| < Re(z)Im(α)/Re(α)",
    DomainKind.PSI: "αz+σ ∈ 𝔇",
}


@dataclass(frozen=True)
class DomainPredicateSet:
    """绑定到一组参数的三个定义域"""
    params: MeixnerParams

    def contains(self, which: DomainKind, z: complex) -> bool:
        return in_domain(which, z, self.params)

    def require(self, which: DomainKind, z: complex):
        """
        Raises:
            DomainError: z 不在指定定义域内，消息中给出被违反的谓词
        """
        if not self.contains(which, z):
            raise DomainError(f"z={complex(z)} 不在 {which.value} 内: {_PREDICATES[which]} violated")
