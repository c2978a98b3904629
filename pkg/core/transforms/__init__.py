"""
相干态与变换
定义域、Fock 空间、E/𝓔、𝕊 = 𝕋∘𝓢 的系数层与积分层
"""
from .series import SeriesEval, TERM_CAP, coherent_series, power_weights_series, geometric_tail
from .domains import DomainKind, DomainPredicateSet, in_domain
from .fock import (
    FockElement,
    coherent_weight,
    fock_inner,
    fock_kernel,
    kernel_section,
    kernel_gram,
    kernel_min_eigenvalue,
    curly_f_inner,
    exact_fock_norm,
)
from .coherent import (
    coherent_E,
    coherent_E_closed,
    lattice_curly_E,
    curly_E,
    curly_E_series,
    coherent_truncation,
    annihilator_eigen_check,
)
from .segal_bargmann import (
    transform_S,
    transform_S_exact,
    transform_S_integral,
    curly_S_exact,
    curly_S_value_exact,
    transform_curlyS,
    transform_curlyS_integral,
    transform_T,
    transform_T_exact,
    transform_T_poisson,
    composition_check,
    rho_expectation,
    v_symbolic,
    v_integral_action,
    l2_norm_squared,
    isometry_pair,
)
from .montecarlo import MonteCarloEstimate, monte_carlo_S

__all__ = [
    'SeriesEval', 'TERM_CAP', 'coherent_series', 'power_weights_series', 'geometric_tail',
    'DomainKind', 'DomainPredicateSet', 'in_domain',
    'FockElement', 'coherent_weight', 'fock_inner', 'fock_kernel', 'kernel_section',
    'kernel_gram', 'kernel_min_eigenvalue', 'curly_f_inner', 'exact_fock_norm',
    'coherent_E', 'coherent_E_closed', 'lattice_curly_E', 'curly_E', 'curly_E_series',
    'coherent_truncation', 'annihilator_eigen_check',
    'transform_S', 'transform_S_exact', 'transform_S_integral', 'curly_S_exact',
    'curly_S_value_exact', 'transform_curlyS', 'transform_curlyS_integral', 'transform_T',
    'transform_T_exact', 'transform_T_poisson', 'composition_check', 'rho_expectation',
    'v_symbolic', 'v_integral_action', 'l2_norm_squared', 'isometry_pair',
    'MonteCarloEstimate', 'monte_carlo_S',
]
