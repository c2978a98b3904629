"""
测度数值层
复 Γ 与 Bessel K、各测度的密度、按测度分派的积分与矩检验
"""
from .spec import (
    MeasureKind,
    MeasureSpec,
    QuadConfig,
    PolyBound,
    frak_d_contains,
    principal_arg,
    orthogonality_measure,
)
from .special import complex_gamma, complex_loggamma, bessel_k, bessel_k_series
from .density import (
    density,
    real_density,
    poisson_mass,
    meixner_log_constant,
    log_meixner_density,
    fock_density,
    fock_density_mixture,
)
from .quadrature import QuadResult, csum, integrate, integrate_radial, poisson_expect, sum_series
from .checks import (
    norm_squared,
    orthogonality_check,
    numeric_moment,
    falling_moment_numeric,
    fock_moment,
    fock_density_paths,
    mellin_psi,
    mellin_convolution_check,
    poisson_falling_identity,
    touchard_moment,
)

__all__ = [
    'MeasureKind', 'MeasureSpec', 'QuadConfig', 'PolyBound', 'frak_d_contains', 'principal_arg',
    'orthogonality_measure',
    'complex_gamma', 'complex_loggamma', 'bessel_k', 'bessel_k_series',
    'density', 'real_density', 'poisson_mass', 'meixner_log_constant', 'log_meixner_density',
    'fock_density', 'fock_density_mixture',
    'QuadResult', 'csum', 'integrate', 'integrate_radial', 'poisson_expect', 'sum_series',
    'norm_squared', 'orthogonality_check', 'numeric_moment', 'falling_moment_numeric',
    'fock_moment', 'fock_density_paths', 'mellin_psi', 'mellin_convolution_check',
    'poisson_falling_identity', 'touchard_moment',
]
