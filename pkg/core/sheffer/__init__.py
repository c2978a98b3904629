"""
正交 Sheffer 序列
参数校验、递推构造、阶梯算子与基变换
"""
from .params import (
    MeixnerClass,
    MeixnerParams,
    validate_params,
    LAGUERRE_REF,
    MEIXNER_FIRST_REF,
    MEIXNER_SECOND_REF,
    REFERENCE_PARAMS,
)
from .poly import (
    Basis,
    ExactPoly,
    require_basis,
    poly_mul,
    mul_x,
    derivative,
    shift,
    h_difference,
    linear_factor_product,
    genfact_poly,
    evaluate,
    complex_coeffs,
)
from .sequence import (
    sheffer_poly,
    shifted_poly,
    raise_,
    lower,
    annihilator,
    expand_monomial_in_shifted,
    shifted_in_monomial,
    falling_to_monomial,
    monomial_to_falling,
    to_monomial,
    to_sheffer,
    to_falling_beta,
    convert,
    to_sheffer_by_solve,
    sheffer_combination_in_monomial,
    series_coefficients_by_difference,
)

__all__ = [
    'MeixnerClass', 'MeixnerParams', 'validate_params',
    'LAGUERRE_REF', 'MEIXNER_FIRST_REF', 'MEIXNER_SECOND_REF', 'REFERENCE_PARAMS',
    'Basis', 'ExactPoly', 'require_basis', 'poly_mul', 'mul_x', 'derivative', 'shift',
    'h_difference', 'linear_factor_product', 'genfact_poly', 'evaluate', 'complex_coeffs',
    'sheffer_poly', 'shifted_poly', 'raise_', 'lower', 'annihilator',
    'expand_monomial_in_shifted', 'shifted_in_monomial', 'falling_to_monomial',
    'monomial_to_falling', 'to_monomial', 'to_sheffer', 'to_falling_beta', 'convert',
    'to_sheffer_by_solve', 'sheffer_combination_in_monomial',
    'series_coefficients_by_difference',
]
