"""
广义 Weyl 代数
算子表达式解析、正规序改写、附录闭式与具体算子表示
"""
from .parser import (
    Generator, Scalar, Sum, Product, Power, OperatorExpr, Token, Parser,
    tokenize, parse_operator, to_text,
)
from .normal_form import (
    NormalForm, WeylAlgebra, normal_order, normal_order_by_words, reduce_words, expand_words,
    random_strategy, random_word, word_to_expr, uv_power_closed_form, vn_u_expected,
    vn_u_relation_check,
)
from .concrete import (
    OpTag, ConcreteOp, apply_concrete, apply_power, apply_normal_form, apply_expr,
    raw_ops, script_ops, script_r_on_one, script_r_shifted_coeffs, moments, raw_moments,
    falling_alpha_beta_moment, falling_moment_via_moments,
)
from .identities import (
    one_minus_alpha_d, factorization_check, conjugation_op, conjugation_inverse,
    conjugation_check, rho_transfer_check, lowering_on_falling_check,
    concrete_realization_check, script_r_iterated,
)

__all__ = [
    'Generator', 'Scalar', 'Sum', 'Product', 'Power', 'OperatorExpr', 'Token', 'Parser',
    'tokenize', 'parse_operator', 'to_text',
    'NormalForm', 'WeylAlgebra', 'normal_order', 'normal_order_by_words', 'reduce_words',
    'expand_words', 'random_strategy', 'random_word', 'word_to_expr', 'uv_power_closed_form',
    'vn_u_expected', 'vn_u_relation_check',
    'OpTag', 'ConcreteOp', 'apply_concrete', 'apply_power', 'apply_normal_form', 'apply_expr',
    'raw_ops', 'script_ops', 'script_r_on_one', 'script_r_shifted_coeffs', 'moments', 'raw_moments',
    'falling_alpha_beta_moment', 'falling_moment_via_moments',
    'one_minus_alpha_d', 'factorization_check', 'conjugation_op', 'conjugation_inverse',
    'conjugation_check', 'rho_transfer_check', 'lowering_on_falling_check',
    'concrete_realization_check', 'script_r_iterated',
]
