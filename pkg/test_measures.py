"""
测试测度数值层

复 Γ、Bessel K、各测度的密度与积分；mpmath 与 scipy.special 作为独立参照
"""
import math
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent))

import mpmath
import numpy as np
import pytest
import sympy
from scipy import special as sc

from core.errors import DomainError
from core.measures import (
    MeasureSpec, PolyBound, QuadConfig, bessel_k, bessel_k_series, complex_gamma, complex_loggamma,
    density, fock_density_paths, fock_moment, frak_d_contains, integrate, mellin_convolution_check,
    norm_squared, numeric_moment, orthogonality_check, orthogonality_measure, poisson_expect,
    poisson_falling_identity, real_density, touchard_moment,
)
from core.sheffer import LAGUERRE_REF, MEIXNER_FIRST_REF, MEIXNER_SECOND_REF, REFERENCE_PARAMS
from core.weylalg import raw_moments

ids = lambda p: p.family.value


def rel_err(actual, expected) -> float:
    return abs(complex(actual) - complex(expected)) / abs(complex(expected))


# ==================== 特殊函数 ====================

def test_gamma_half():
    assert complex_gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize("z", [0.1, 1, 3.7, 12.5, 0.5 + 2j, -2.5 + 0.3j, 1 - 7j, 20 + 20j, -3.5])
def test_gamma_matches_mpmath(z):
    assert rel_err(complex_gamma(z), complex(mpmath.gamma(z))) < 1e-11


@pytest.mark.parametrize("z", [0.5 + 30j, 2 - 45j, -4.5 + 25j])
def test_loggamma_large_imaginary(z):
    # 只比较 exp(loggamma)，分支不要求一致
    expected = complex(mpmath.gamma(z))
    got = complex(mpmath.exp(complex_loggamma(z)))
    assert rel_err(got, expected) < 1e-9


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(DomainError):
        complex_gamma(z)
    with pytest.raises(DomainError):
        complex_loggamma(z)


def test_bessel_k_half_order():
    # K_{1/2}(x) = √(π/(2x)) e^{−x}
    assert bessel_k(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-12)
    assert bessel_k(0.5, 1.0) == pytest.approx(0.461068, abs=1e-6)


@pytest.mark.parametrize("theta", [0, 0.3, 1, 2.5, -1.5])
@pytest.mark.parametrize("x", [0.05, 0.5, 2, 10, 40])
def test_bessel_k_matches_references(theta, x):
    ref = float(mpmath.besselk(theta, x))
    assert bessel_k(theta, x) == pytest.approx(ref, rel=1e-9)
    assert bessel_k(theta, x) == pytest.approx(sc.kv(theta, x), rel=1e-9)


@pytest.mark.parametrize("theta", [0, 0.3, 1, 2, 2.5])
@pytest.mark.parametrize("x", [0.2, 1, 3])
def test_bessel_series_path(theta, x):
    assert bessel_k_series(theta, x) == pytest.approx(sc.kv(theta, x), rel=1e-8)


def test_bessel_domain():
    with pytest.raises(DomainError):
        bessel_k(1, 0)
    with pytest.raises(DomainError):
        bessel_k_series(1, -1)


# ==================== 测度描述 ====================

def test_orthogonality_measure_kinds():
    assert orthogonality_measure(LAGUERRE_REF).kind.value == "Gamma"
    assert orthogonality_measure(MEIXNER_FIRST_REF).kind.value == "NegBinomial"
    assert orthogonality_measure(MEIXNER_SECOND_REF).kind.value == "Meixner"


def test_frak_d():
    assert frak_d_contains(2, 1, -3 + 5j)
    assert frak_d_contains(1, 1, 1 + 100j)
    assert not frak_d_contains(1, 1, -1)
    assert frak_d_contains(1 + 1j, 1 - 1j, 1 + 0.5j)
    assert not frak_d_contains(1 + 1j, 1 - 1j, 1 + 2j)


def test_zeta_outside_domain_names_predicate():
    with pytest.raises(DomainError, match="violated"):
        orthogonality_measure(MEIXNER_SECOND_REF, 1 + 2j)
    with pytest.raises(DomainError, match="violated"):
        orthogonality_measure(LAGUERRE_REF, -1)


def test_quad_config_validation():
    with pytest.raises(DomainError):
        QuadConfig(rel_tol=0)
    with pytest.raises(DomainError):
        QuadConfig(max_nodes=8)
    cfg = QuadConfig.from_dict({"rel_tol": 1e-8, "unused": 1})
    assert cfg.rel_tol == 1e-8 and QuadConfig.from_dict(cfg.to_dict()) == cfg


# ==================== 密度 ====================

@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_complex_path_matches_real_path(params):
    spec = orthogonality_measure(params)
    x = 1.0 if not params.is_meixner_second else -0.7
    assert density(spec, x).real == pytest.approx(real_density(spec, x), rel=1e-10)
    assert abs(density(spec, x).imag) < 1e-12


def test_density_support():
    with pytest.raises(DomainError):
        density(orthogonality_measure(LAGUERRE_REF), -1.0)
    with pytest.raises(DomainError):
        density(orthogonality_measure(MEIXNER_FIRST_REF), 0.5)
    with pytest.raises(DomainError):
        density(orthogonality_measure(MEIXNER_SECOND_REF), 1 + 1j)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_total_mass(params):
    value = integrate(orthogonality_measure(params), lambda x: 1.0).value
    assert value == pytest.approx(1.0, rel=1e-9)


def test_neg_binomial_mean():
    spec = MeasureSpec.neg_binomial(2, 1, 2)
    assert integrate(spec, lambda x: x).value == pytest.approx(1.0, rel=1e-10)


# ==================== 矩与正交性 ====================

@pytest.mark.parametrize("params, n_max, tol", [
    (LAGUERRE_REF, 8, 1e-8),
    (MEIXNER_FIRST_REF, 8, 1e-8),
    (MEIXNER_SECOND_REF, 6, 1e-6),
], ids=["Laguerre", "MeixnerFirst", "MeixnerSecond"])
def test_moment_oracle(params, n_max, tol):
    for n in range(n_max + 1):
        exact = raw_moments(params, n).to_complex()
        got = numeric_moment(params, n).value
        scale = max(1.0, abs(exact))
        assert abs(got - exact) / scale < tol, f"n={n}"


def test_complex_zeta_moment():
    # Laguerre 下 ζ 复数时 E[x] = αζ/η
    zeta = 1 + 0.5j
    got = numeric_moment(LAGUERRE_REF, 1, zeta=zeta).value
    assert rel_err(got, zeta) < 1e-8


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_orthogonality(params):
    for m in range(4):
        for n in range(m + 1):
            value, expected = orthogonality_check(params, m, n)
            norm = math.sqrt(abs(norm_squared(params, m).to_complex()) * abs(norm_squared(params, n).to_complex()))
            assert abs(value - expected.to_complex()) / norm < 1e-7, f"m={m}, n={n}"


# ==================== Poisson ====================

@pytest.mark.parametrize("zeta", [0.5, 3.0, 1 + 1j, 0.2 - 0.7j])
@pytest.mark.parametrize("n", [0, 1, 4, 7])
def test_poisson_falling_moments(zeta, n):
    numeric, expected = poisson_falling_identity(zeta, n)
    assert abs(numeric - expected) <= 1e-9 * max(1.0, abs(expected))


@pytest.mark.parametrize("zeta", [0.5, 2.0, 1 + 1j])
@pytest.mark.parametrize("n", [1, 3, 6])
def test_touchard(zeta, n):
    numeric, expected = touchard_moment(zeta, n)
    assert abs(numeric - expected) <= 1e-9 * max(1.0, abs(expected))


def _shifted_power_poisson_exact(shift: Fraction, degree: int) -> float:
    """E[(ξ−a)^d]，ξ ~ Poisson(1)：按二项式展开，E[ξ^j] 为 Bell 数"""
    total = sum(Fraction(math.comb(degree, j)) * (-shift) ** (degree - j) * int(sympy.bell(j))
                for j in range(degree + 1))
    return float(total)


def test_poisson_tail_is_certified():
    # 根 6.01 紧挨格点 6，前几项的比值会骤降
    f = lambda k: (k - 6.01) ** 20
    exact = _shifted_power_poisson_exact(Fraction(601, 100), 20)
    result = poisson_expect(1.0, f, bound=PolyBound(20, 6.01))
    assert rel_err(result.value, exact) < 1e-10
    assert abs(result.value - exact) <= result.error + 1e-12 * exact
    assert result.nodes > 7


def test_poisson_tail_near_root_without_bound():
    f = lambda k: (k - 6.01) ** 20
    exact = _shifted_power_poisson_exact(Fraction(601, 100), 20)
    result = poisson_expect(1.0, f)
    assert rel_err(result.value, exact) < 1e-10


def test_neg_binomial_tail_near_root():
    spec = MeasureSpec.neg_binomial(2, 1, 2)
    f = lambda x: (complex(x) - 6.01) ** 12
    direct = math.fsum((density(spec, n) * f(n)).real for n in range(600))
    result = integrate(spec, f, bound=PolyBound(12, 6.01))
    assert rel_err(result.value, direct) < 1e-9


@pytest.mark.parametrize("roots", [
    [6.01] * 5,
    [3, -5, 2j],
    [0.1, 0.2, -40, 1 + 1j],
    [1e-3],
])
def test_poly_bound_contains_roots(roots):
    coeffs = np.poly(roots)[::-1]
    bound = PolyBound.from_coeffs(coeffs)
    assert bound.degree == len(roots)
    assert max(abs(complex(r)) for r in roots) <= bound.root_bound * (1 + 1e-12)
    assert bound.ratio(bound.root_bound) == math.inf
    assert 1 < bound.ratio(bound.root_bound + 10) < bound.ratio(bound.root_bound + 1)


def test_poly_bound_combinators():
    b = PolyBound(3, 2.0)
    assert b.shifted(1 + 1j).root_bound == pytest.approx(2 + math.sqrt(2))
    assert b.scaled(4) == PolyBound(3, 0.5)
    assert b.times(PolyBound.monomial(2)) == PolyBound(5, 2.0)
    assert b.squared_modulus() == PolyBound(6, 2.0)
    assert PolyBound.from_coeffs([5, 0, 0]) == PolyBound(0, 0.0)
    with pytest.raises(DomainError):
        PolyBound(-1)
    with pytest.raises(DomainError):
        b.scaled(0)


# ==================== Fock 测度 ====================

@pytest.mark.parametrize("eta, sigma", [(1, 1), (1, 2), (2, 1)])
def test_fock_moments(eta, sigma):
    for n in range(4):
        expected = factorial(n) * math.prod(sigma + eta * j for j in range(n))
        assert fock_moment(eta, sigma, n, n) == pytest.approx(expected, rel=1e-6)
    assert abs(fock_moment(eta, sigma, 2, 1)) < 1e-8


@pytest.mark.parametrize("eta, sigma", [(1, 1), (1, 2), (2, 1)])
@pytest.mark.parametrize("r", [0.1, 1.0, 4.0])
def test_fock_density_two_paths(eta, sigma, r):
    closed, mixture = fock_density_paths(eta, sigma, r)
    assert closed == pytest.approx(mixture, rel=1e-6)


@pytest.mark.parametrize("sigma, r", [(1, 0.5), (2, 1.0), (0.5, 3.0)])
def test_mellin_convolution(sigma, r):
    psi, expected = mellin_convolution_check(sigma, r)
    assert psi == pytest.approx(expected, rel=1e-6)


def test_mellin_domain():
    with pytest.raises(DomainError):
        mellin_convolution_check(1, 0)
