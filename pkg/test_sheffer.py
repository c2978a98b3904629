"""
测试正交 Sheffer 序列

参数校验、三项递推、阶梯算子、附录闭式基变换与差分系数
"""
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent))

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from core.combinat import GaussRational, gr
from core.errors import BasisMismatchError, DomainError
from core.sheffer import (
    LAGUERRE_REF, MEIXNER_FIRST_REF, MEIXNER_SECOND_REF, REFERENCE_PARAMS,
    Basis, ExactPoly, MeixnerClass, annihilator, convert, evaluate, expand_monomial_in_shifted,
    falling_to_monomial, h_difference, lower, monomial_to_falling, mul_x, raise_,
    series_coefficients_by_difference, sheffer_combination_in_monomial, sheffer_poly, shift,
    shifted_in_monomial, shifted_poly, to_falling_beta, to_monomial, to_sheffer,
    to_sheffer_by_solve, validate_params,
)

positive = st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4)


@st.composite
def meixner_params(draw):
    family = draw(st.sampled_from(list(MeixnerClass)))
    sigma = draw(positive)
    if family is MeixnerClass.LAGUERRE:
        a = draw(positive)
        return validate_params(a, a, sigma, family)
    if family is MeixnerClass.MEIXNER_FIRST:
        b = draw(positive)
        return validate_params(b + draw(positive), b, sigma, family)
    alpha = GaussRational(draw(st.fractions(min_value=0, max_value=2, max_denominator=3)), draw(positive))
    return validate_params(alpha, alpha.conjugate(), sigma, family)


small_coeffs = st.lists(
    st.builds(GaussRational, st.fractions(-3, 3, max_denominator=3), st.fractions(-3, 3, max_denominator=3)),
    min_size=1, max_size=6,
)

x = sympy.Symbol("x")


# ==================== 参数 ====================

@pytest.mark.parametrize("alpha, beta, sigma, family", [
    (1, 2, 1, "Laguerre"),
    (-1, -1, 1, "Laguerre"),
    (1, 2, 1, "MeixnerFirst"),
    (1, 1, 1, "MeixnerFirst"),
    ("1+i", "1+i", 1, "MeixnerSecond"),
    ("1", "1", 1, "MeixnerSecond"),
    ("-1+i", "-1-i", 1, "MeixnerSecond"),
    (1, 1, 0, "Laguerre"),
    (1, 1, "i", "Laguerre"),
    (1, 1, 1, "Hermite"),
])
def test_validate_rejects(alpha, beta, sigma, family):
    with pytest.raises(DomainError):
        validate_params(alpha, beta, sigma, family)


def test_derived_quantities():
    p = MEIXNER_FIRST_REF
    assert p.lam == 3 and p.eta == 2 and p.ell == 1
    q = MEIXNER_SECOND_REF
    assert q.lam == 2 and q.eta == 2 and q.ell == 0
    assert q.shift == gr("1/2-1/2i")


def test_family_names_are_case_insensitive():
    assert MeixnerClass.from_name("laguerre") is MeixnerClass.LAGUERRE
    assert MeixnerClass.from_name("MEIXNER_SECOND") is MeixnerClass.MEIXNER_SECOND


# ==================== 递推 ====================

def test_laguerre_low_degrees():
    assert sheffer_poly(LAGUERRE_REF, 0).coeffs == (1,)
    assert sheffer_poly(LAGUERRE_REF, 1).coeffs == (-1, 1)
    assert sheffer_poly(LAGUERRE_REF, 2).coeffs == (2, -4, 1)


@pytest.mark.parametrize("sigma", [1, 2, Fraction(5, 2)])
@pytest.mark.parametrize("n", range(0, 8))
def test_laguerre_matches_sympy(sigma, n):
    """α=β=1 时 s_n = (−1)ⁿ n! L_n^{(σ−1)}"""
    params = validate_params(1, 1, sigma, "Laguerre")
    a = sympy.Rational(sigma.numerator, sigma.denominator) - 1 if isinstance(sigma, Fraction) else sigma - 1
    ref = sympy.Poly(sympy.expand((-1) ** n * factorial(n) * sympy.assoc_laguerre(n, a, x)), x)
    got = sheffer_poly(params, n)
    expected = [ref.coeff_monomial(x ** k) for k in range(n + 1)]
    assert [sympy.Rational(c.re.numerator, c.re.denominator) for c in got.coeffs] == expected


@given(meixner_params(), st.integers(1, 8))
@settings(max_examples=40, deadline=None)
def test_recurrence(params, n):
    s = lambda k: sheffer_poly(params, k)
    rhs = (s(n + 1) + s(n).scale(params.lam * n + params.ell)
           + s(n - 1).scale(params.sigma * n + params.eta * (n * (n - 1))))
    assert mul_x(s(n)) == rhs


@given(meixner_params(), st.integers(0, 8))
@settings(max_examples=40, deadline=None)
def test_monic_of_exact_degree(params, n):
    p = sheffer_poly(params, n)
    assert p.degree == n and p.coefficient(n) == 1


@pytest.mark.parametrize("n", range(0, 8))
def test_meixner_second_is_shifted(n):
    params = MEIXNER_SECOND_REF
    assert shift(shifted_poly(params, n), params.shift) == sheffer_poly(params, n)


@pytest.mark.parametrize("n", range(0, 8))
def test_meixner_second_coefficients_are_real(n):
    assert all(c.is_real for c in sheffer_poly(MEIXNER_SECOND_REF, n).coeffs)


def test_negative_degree():
    with pytest.raises(DomainError):
        sheffer_poly(LAGUERRE_REF, -1)


# ==================== 阶梯算子 ====================

@given(meixner_params(), small_coeffs)
@settings(max_examples=40, deadline=None)
def test_ladder_commutator(params, coeffs):
    """[∂⁻, ∂⁺] = 1"""
    p = ExactPoly(Basis.SHEFFER, tuple(coeffs))
    assert lower(params, raise_(params, p)) - raise_(params, lower(params, p)) == p


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=lambda p: p.family.value)
def test_annihilator_on_basis(params):
    for n in range(1, 7):
        got = annihilator(params, ExactPoly.basis_element(n, Basis.SHEFFER))
        expected = ExactPoly.basis_element(n - 1, Basis.SHEFFER).scale(
            params.sigma * n + params.eta * (n * (n - 1)))
        assert got == expected
    assert annihilator(params, ExactPoly.constant(1, Basis.SHEFFER)).is_zero


def test_ladder_requires_sheffer_basis():
    with pytest.raises(BasisMismatchError):
        raise_(LAGUERRE_REF, ExactPoly.basis_element(2))
    with pytest.raises(BasisMismatchError):
        mul_x(ExactPoly.basis_element(2, Basis.SHEFFER))


# ==================== 基变换 ====================

def test_x_in_sheffer_basis():
    # x = s_1 + l·s_0
    for params in REFERENCE_PARAMS:
        got = to_sheffer(params, ExactPoly.basis_element(1))
        assert got.coeffs == (params.ell, 1)


@given(meixner_params(), small_coeffs)
@settings(max_examples=40, deadline=None)
def test_closed_form_matches_solve(params, coeffs):
    p = ExactPoly(Basis.MONOMIAL, tuple(coeffs))
    assert to_sheffer(params, p) == to_sheffer_by_solve(params, p)


@given(meixner_params(), small_coeffs)
@settings(max_examples=40, deadline=None)
def test_sheffer_to_monomial_matches_direct_sum(params, coeffs):
    p = ExactPoly(Basis.SHEFFER, tuple(coeffs))
    assert to_monomial(params, p) == sheffer_combination_in_monomial(params, p)


@given(meixner_params(), small_coeffs, st.sampled_from(list(Basis)), st.sampled_from(list(Basis)))
@settings(max_examples=40, deadline=None)
def test_conversions_preserve_the_function(params, coeffs, src, dst):
    p = ExactPoly(src, tuple(coeffs))
    q = convert(params, p, dst)
    assert q.basis is dst
    assert to_monomial(params, q) == to_monomial(params, p)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=lambda p: p.family.value)
def test_appendix_expansion_of_shifted(params):
    for n in range(0, 9):
        assert shifted_in_monomial(params, n) == shifted_poly(params, n)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=lambda p: p.family.value)
def test_monomial_in_shifted_basis(params):
    for n in range(0, 7):
        coeffs = expand_monomial_in_shifted(params, n)
        total = ExactPoly.zero()
        for i, c in enumerate(coeffs):
            total = total + shifted_poly(params, i).scale(c)
        assert total == ExactPoly.basis_element(n)


def test_falling_basis():
    x2 = ExactPoly.basis_element(2)
    assert monomial_to_falling(1, x2).coeffs == (0, 1, 1)
    assert falling_to_monomial(2, ExactPoly.basis_element(2, Basis.FALLING_BETA)).coeffs == (0, -2, 1)
    with pytest.raises(DomainError):
        monomial_to_falling(0, x2)


def test_falling_beta_uses_params_beta():
    f = to_falling_beta(MEIXNER_FIRST_REF, ExactPoly.basis_element(2))
    # z² = (z|1)_2 + (z|1)_1，β = 1
    assert f.coeffs == (0, 1, 1)


# ==================== 多项式运算 ====================

@given(small_coeffs, st.fractions(-2, 2, max_denominator=3), st.fractions(-2, 2, max_denominator=3))
def test_shift_evaluates(coeffs, c, z):
    p = ExactPoly(Basis.MONOMIAL, tuple(coeffs))
    assert evaluate(shift(p, c), gr(z)) == evaluate(p, gr(z) + gr(c))


def test_h_difference():
    # D_1 x² = 2x + 1；h=0 时退化为求导
    x2 = ExactPoly.basis_element(2)
    assert h_difference(x2, 1).coeffs == (1, 2)
    assert h_difference(x2, 0).coeffs == (0, 2)


# ==================== 差分系数 ====================

def test_difference_recovers_falling_coefficient():
    # φ(z) = (z|β)_2 ⇒ f_2 = 1, f_1 = f_0 = 0
    beta = gr(2)
    phi = lambda z: z * (z - beta)
    values = [phi(beta * k) for k in range(3)]
    assert series_coefficients_by_difference(values, beta, 2) == 1
    assert series_coefficients_by_difference(values, beta, 1) == 0
    assert series_coefficients_by_difference(values, beta, 0) == 0


def test_difference_float_path():
    values = [complex(k * (k - 1)) for k in range(3)]
    assert series_coefficients_by_difference(values, 1.0, 2) == pytest.approx(1.0)


def test_difference_needs_enough_samples():
    with pytest.raises(DomainError):
        series_coefficients_by_difference([gr(1)], gr(1), 2)
