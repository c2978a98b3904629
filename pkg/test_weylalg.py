"""
测试广义 Weyl 代数

解析器、正规序改写、闭式、具体表示与矩
"""
import sys
from math import factorial
from pathlib import Path

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.combinat import GaussRational, genfact, gr, rising
from core.errors import BasisMismatchError, DomainError, ParseError
from core.sheffer import (
    LAGUERRE_REF, MEIXNER_FIRST_REF, MEIXNER_SECOND_REF, REFERENCE_PARAMS, Basis, ExactPoly,
    evaluate, poly_mul, sheffer_poly, validate_params,
)
from core.weylalg import (
    ConcreteOp, Generator, NormalForm, OpTag, Power, Product, apply_concrete, apply_expr,
    concrete_realization_check, conjugation_check, factorization_check,
    falling_alpha_beta_moment, falling_moment_via_moments, lowering_on_falling_check, moments,
    normal_order, normal_order_by_words, parse_operator, random_strategy, raw_moments, raw_ops,
    rho_transfer_check, script_r_iterated, script_r_on_one, script_r_shifted_coeffs, to_text, uv_power_closed_form,
    vn_u_relation_check, word_to_expr,
)

U, V = Generator("U"), Generator("V")
ids = lambda p: p.family.value

gauss = st.builds(GaussRational, st.fractions(-3, 3, max_denominator=3), st.fractions(-3, 3, max_denominator=3))
words = st.lists(st.sampled_from("UV"), max_size=8)
monomial_polys = st.lists(gauss, min_size=1, max_size=5).map(lambda cs: ExactPoly(Basis.MONOMIAL, tuple(cs)))


# ==================== 解析 ====================

@pytest.mark.parametrize("text, a, b, lines", [
    ("V*U", "1", "0", ["U^1V^1:1", "V^1:1"]),
    ("U^2", "1", "0", ["U^2:1"]),
    ("V*U - U*V", "2", "3", ["V^1:2", "1:3"]),
    ("(1/2+i)*U + 3", "0", "0", ["U^1:1/2+i", "1:3"]),
    ("U - U", "1", "1", []),
])
def test_normal_order_listing(text, a, b, lines):
    assert normal_order(parse_operator(text), gr(a), gr(b)).to_lines() == lines


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("U*", 2),
    ("U+)", 2),
    ("U^V", 2),
    ("U $", 2),
    ("(U*V", 4),
    ("U V", 2),
    ("2/", 2),
])
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_operator(text)
    assert info.value.offset == offset


def test_parse_error_offset_is_in_bytes():
    # "σ" 占两个字节
    with pytest.raises(ParseError) as info:
        parse_operator("U+σ")
    assert info.value.offset == 2


def test_to_text_reparses():
    node = parse_operator("-(U*V)^2 - 1/3i*V + (2-i)")
    again = parse_operator(to_text(node))
    assert normal_order(again, 1, 2) == normal_order(node, 1, 2)


def test_leading_minus():
    nf = normal_order(parse_operator("-U"), 0, 0)
    assert nf.to_lines() == ["U^1:-1"]


# ==================== 改写 ====================

@given(words, gauss, gauss, st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_rewriting_is_confluent(word, a, b, rnd):
    expr = word_to_expr(word)
    by_algebra = normal_order(expr, a, b)
    assert normal_order_by_words(expr, a, b) == by_algebra
    assert normal_order_by_words(expr, a, b, random_strategy(rnd)) == by_algebra


@given(st.integers(0, 7), gauss, gauss)
@settings(max_examples=40, deadline=None)
def test_uv_power_closed_form(n, a, b):
    assert normal_order(Power(Product(U, V), n), a, b) == uv_power_closed_form(n, a, b)


@given(st.integers(1, 10), gauss, gauss)
@settings(max_examples=40, deadline=None)
def test_vn_u_relation(n, a, b):
    assert vn_u_relation_check(n, a, b)


def test_vn_u_requires_positive_n():
    with pytest.raises(DomainError):
        vn_u_relation_check(0, 1, 1)


def test_normal_form_drops_zero_terms():
    nf = NormalForm({(1, 0): gr(0), (0, 1): gr(2)})
    assert len(nf) == 1 and nf.coefficient(0, 1) == 2
    with pytest.raises(DomainError):
        NormalForm({(-1, 0): gr(1)})


# ==================== 具体表示 ====================

@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_raw_ops_commutator(params):
    """[V,U] = βV + (α−β) 作用在 s_m 上"""
    u_op, v_op = raw_ops(params)
    for m in range(6):
        s = ExactPoly.basis_element(m, Basis.SHEFFER)
        lhs = apply_concrete(v_op, apply_concrete(u_op, s)) - apply_concrete(u_op, apply_concrete(v_op, s))
        rhs = apply_concrete(v_op, s).scale(params.beta) + s.scale(params.alpha - params.beta)
        assert lhs == rhs


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@given(word=words, m=st.integers(0, 4))
@settings(max_examples=25, deadline=None)
def test_concrete_realization(params, word, m):
    assert concrete_realization_check(params, word_to_expr(word), m)


def test_apply_expr_follows_operator_order():
    # (UV)s_0 = U(V s_0) = U s_0
    u_op, v_op = raw_ops(LAGUERRE_REF)
    s0 = ExactPoly.constant(1, Basis.SHEFFER)
    assert apply_expr(Product(U, V), u_op, v_op, s0) == apply_concrete(u_op, s0)


def test_concrete_basis_is_enforced():
    _, v_op = raw_ops(LAGUERRE_REF)
    with pytest.raises(BasisMismatchError):
        apply_concrete(v_op, ExactPoly.basis_element(1))
    with pytest.raises(BasisMismatchError):
        apply_concrete(ConcreteOp(OpTag.Z), ExactPoly.basis_element(1, Basis.SHEFFER))


def test_parametrized_op_needs_params():
    with pytest.raises(DomainError):
        ConcreteOp(OpTag.RHO)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@given(p=monomial_polys)
@settings(max_examples=20, deadline=None)
def test_operator_identities(params, p):
    assert factorization_check(params, p)
    assert conjugation_check(params, p)
    assert rho_transfer_check(params, p.with_basis(Basis.SHEFFER))


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_script_r_closed_form(params):
    for n in range(7):
        assert script_r_on_one(params, n) == script_r_iterated(params, n)


@pytest.mark.parametrize("params, expected", [
    (LAGUERRE_REF, (0, 0, 0, 1)),       # α = β：只剩 S(3,3)
    (MEIXNER_FIRST_REF, (0, 1, 3, 1)),  # α − β = 1：S(3,k)
], ids=["Laguerre", "MeixnerFirst"])
def test_script_r_shifted_basis(params, expected):
    assert script_r_shifted_coeffs(params, 3) == tuple(gr(c) for c in expected)
    assert script_r_shifted_coeffs(params, 0) == (gr(1),)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_script_r_at_origin_gives_moments(params):
    for n in range(6):
        assert evaluate(script_r_on_one(params, n), gr(0)) == moments(params, n)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_lowering_on_falling(params):
    for n in range(7):
        assert lowering_on_falling_check(params, n)


# ==================== 矩 ====================

@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 6)])
def test_laguerre_reference_moments(n, expected):
    assert moments(LAGUERRE_REF, n) == expected


@pytest.mark.parametrize("a, sigma", [(1, 2), (2, 1), ("1/2", "3/2")])
def test_gamma_moments(a, sigma):
    """Laguerre 类：E[xⁿ] = αⁿ (σ/η)^{(n)}"""
    params = validate_params(a, a, sigma, "Laguerre")
    for n in range(7):
        assert moments(params, n) == params.alpha ** n * rising(params.sigma / params.eta, n)


def test_meixner_second_raw_moments():
    # s_1 = x 与 1 正交，x² = s_2 + λx + σ
    assert raw_moments(MEIXNER_SECOND_REF, 1) == 0
    assert raw_moments(MEIXNER_SECOND_REF, 2) == MEIXNER_SECOND_REF.sigma
    assert raw_moments(MEIXNER_FIRST_REF, 3) == moments(MEIXNER_FIRST_REF, 3)


def _functional(params, p: ExactPoly) -> GaussRational:
    return sum((c * raw_moments(params, k) for k, c in enumerate(p.coeffs)), GaussRational.zero())


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_exact_orthogonality(params):
    for m in range(6):
        for n in range(m + 1):
            value = _functional(params, poly_mul(sheffer_poly(params, m), sheffer_poly(params, n)))
            expected = factorial(n) * genfact(params.sigma, -params.eta, n) if m == n else 0
            assert value == expected


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_falling_moments_two_paths(params):
    for n in range(8):
        assert falling_alpha_beta_moment(params, n) == falling_moment_via_moments(params, n)


def test_moments_domain():
    with pytest.raises(DomainError):
        moments(LAGUERRE_REF, -1)
