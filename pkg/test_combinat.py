"""
测试组合内核

高斯有理数、Stirling/Lah 表、广义阶乘与广义 Stirling 数；sympy 作为独立参照
"""
import sys
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from core.combinat import (
    GaussRational, falling, gen_stirling, genfact, gr, lah, rising,
    stirling1, stirling2, stirling_fault,
)
from core.errors import DomainError

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gauss = st.builds(GaussRational, small_fractions, small_fractions)


# ==================== 高斯有理数 ====================

@pytest.mark.parametrize("text, re, im", [
    ("2", 2, 0),
    ("-3/4", Fraction(-3, 4), 0),
    ("i", 0, 1),
    ("-1/3i", 0, Fraction(-1, 3)),
    ("3/2+1/3i", Fraction(3, 2), Fraction(1, 3)),
    ("1-i", 1, -1),
])
def test_parse_literals(text, re, im):
    z = GaussRational.parse(text)
    assert z.re == re and z.im == im


@pytest.mark.parametrize("text", ["", "1.5", "a", "1/0", "2+3"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        GaussRational.parse(text)


@given(gauss)
def test_str_parses_back(z):
    assert GaussRational.parse(str(z)) == z


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


def test_division_by_zero():
    with pytest.raises(DomainError):
        gr(1) / GaussRational.zero()


def test_components_must_be_rational():
    with pytest.raises(TypeError):
        GaussRational(0.5)


# ==================== Stirling / Lah ====================

@pytest.mark.parametrize("n", range(0, 13))
def test_stirling_tables_match_sympy(n):
    for k in range(n + 1):
        assert stirling2(n, k) == sympy_stirling(n, k, kind=2)
        assert stirling1(n, k) == sympy_stirling(n, k, kind=1, signed=True)


@pytest.mark.parametrize("n", range(0, 11))
def test_stirling_orthogonality(n):
    for m in range(n + 1):
        total = sum(stirling2(n, j) * stirling1(j, m) for j in range(m, n + 1))
        assert total == (1 if m == n else 0)


@pytest.mark.parametrize("n, k, expected", [(1, 1, 1), (3, 2, 6), (4, 2, 36), (5, 5, 1)])
def test_lah_values(n, k, expected):
    assert lah(n, k) == expected


@given(st.integers(1, 14), st.data())
def test_lah_closed_form(n, data):
    k = data.draw(st.integers(1, n))
    assert lah(n, k) == comb(n - 1, k - 1) * factorial(n) // factorial(k)


@given(st.integers(1, 10), st.data())
def test_lah_is_stirling_convolution(n, data):
    k = data.draw(st.integers(1, n))
    unsigned = sum(abs(stirling1(n, j)) * stirling2(j, k) for j in range(k, n + 1))
    assert lah(n, k) == unsigned


@pytest.mark.parametrize("n, k", [(2, 3), (-1, 0), (3, -1)])
def test_stirling_domain(n, k):
    with pytest.raises(DomainError):
        stirling2(n, k)


def test_lah_zero_column_rejected():
    with pytest.raises(DomainError):
        lah(3, 0)


def test_stirling_fault_is_scoped():
    assert stirling2(5, 3) == 25
    with stirling_fault():
        assert stirling2(5, 3) == 26
    assert stirling2(5, 3) == 25


# ==================== 广义阶乘 ====================

def test_genfact_values():
    assert genfact(gr(5), gr(1), 3) == 60
    assert rising(gr(2), 3) == 24
    assert falling(gr(4), 4) == 24
    assert genfact(gr("1+i"), gr(2), 0) == 1


def test_genfact_negative_order():
    with pytest.raises(DomainError):
        genfact(gr(1), gr(1), -1)


@given(gauss, gauss, gauss, st.integers(0, 6))
@settings(max_examples=60)
def test_genfact_binomial(x, y, h, n):
    """(x+y|h)_n = Σ C(n,k)(x|h)_k (y|h)_{n−k}"""
    expected = sum((comb(n, k) * genfact(x, h, k) * genfact(y, h, n - k) for k in range(n + 1)),
                   GaussRational.zero())
    assert genfact(x + y, h, n) == expected


@given(gauss, small_fractions, small_fractions, st.integers(0, 6))
@settings(max_examples=60)
def test_gen_stirling_expansion(z, h, r, n):
    """(z+r|h)_n = Σ_k S(n,k;h,r)(z|−h)_k"""
    h, r = gr(h), gr(r)
    lhs = genfact(z + r, h, n)
    rhs = sum((gen_stirling(n, k, h, r) * genfact(z, -h, k) for k in range(n + 1)),
              GaussRational.zero())
    assert lhs == rhs


def test_gen_stirling_reduces_to_lah():
    # h=1, r=0：(z)_n 按上升阶乘展开，系数为带号 Lah 数
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert gen_stirling(n, k, 1, 0) == (-1) ** (n - k) * lah(n, k)


def test_gen_stirling_domain():
    with pytest.raises(DomainError):
        gen_stirling(2, 3, 1, 0)

