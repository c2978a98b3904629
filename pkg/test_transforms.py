"""
测试相干态与变换

𝕊 / 𝓢 / 𝕋 的系数层与积分层、E 与 𝓔 的双路径、Fock 核
"""
import cmath
import sys
from pathlib import Path

# 添加项目路径
sys.path.insert(0, str(Path(__file__).parent))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.combinat import GaussRational, genfact, gr
from core.errors import BasisMismatchError, DomainError
from core.sheffer import (
    LAGUERRE_REF, MEIXNER_FIRST_REF, MEIXNER_SECOND_REF, REFERENCE_PARAMS, Basis, ExactPoly,
    evaluate, to_falling_beta, validate_params,
)
from core.transforms import (
    DomainKind, DomainPredicateSet, FockElement, annihilator_eigen_check, coherent_E,
    coherent_E_closed, coherent_weight, composition_check, curly_E, curly_E_series, curly_S_exact,
    exact_fock_norm, fock_inner, fock_kernel, in_domain, isometry_pair, kernel_gram,
    kernel_min_eigenvalue, kernel_section, monte_carlo_S, rho_expectation, transform_curlyS,
    transform_curlyS_integral, transform_S, transform_S_exact, transform_S_integral, transform_T,
    transform_T_exact, transform_T_poisson, v_integral_action, v_symbolic,
)

ids = lambda p: p.family.value

gauss = st.builds(GaussRational, st.fractions(-3, 3, max_denominator=3), st.fractions(-3, 3, max_denominator=3))
polys = st.lists(gauss, min_size=1, max_size=6)

SUPPORT = {
    "Laguerre": (0.5, 1.0, 2.0),
    "MeixnerFirst": (0.0, 1.0, 2.0),
    "MeixnerSecond": (-1.0, 0.0, 1.0),
}
CURLY_S_POINTS = {
    "Laguerre": (0j, 0.5 + 0j, 1 + 0.5j),
    "MeixnerFirst": (0j, 0.5 + 0j, 1 + 0.5j),
    "MeixnerSecond": (0j, 0.25 + 0j, 0.5 - 0.25j),
}


def rel_err(actual, expected) -> float:
    return abs(complex(actual) - complex(expected)) / max(1.0, abs(complex(expected)))


# ==================== 系数层 ====================

@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_S_maps_sheffer_basis_to_powers(params):
    z = 0.5 + 0.25j
    for n in range(6):
        f = ExactPoly.basis_element(n, Basis.SHEFFER)
        assert transform_S(params, f, z).value == pytest.approx(z ** n, rel=1e-14)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_S_of_x(params):
    # x = s_1 + l ⇒ 𝕊x = z + l
    assert transform_S_exact(params, ExactPoly.basis_element(1)).coeffs == (params.ell, 1)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@given(coeffs=polys, basis=st.sampled_from([Basis.MONOMIAL, Basis.SHEFFER]))
@settings(max_examples=25, deadline=None)
def test_S_is_T_after_curly_S(params, coeffs, basis):
    assert composition_check(params, ExactPoly(basis, tuple(coeffs)))


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_curly_S_maps_to_falling_factorials(params):
    for z in CURLY_S_POINTS[params.family.value]:
        for n in range(5):
            f = ExactPoly.basis_element(n, Basis.SHEFFER)
            expected = genfact(z, params.beta_c, n)
            assert transform_curlyS(params, f, z) == pytest.approx(expected, rel=1e-12, abs=1e-14)


def test_curly_S_domain():
    f = ExactPoly.basis_element(1, Basis.SHEFFER)
    with pytest.raises(DomainError, match="violated"):
        transform_curlyS(LAGUERRE_REF, f, -10)
    # α > β > 0 时 𝓓 = ℂ
    transform_curlyS(MEIXNER_FIRST_REF, f, -10)
    with pytest.raises(DomainError, match="Psi"):
        transform_curlyS(MEIXNER_SECOND_REF, f, -5)


def test_T_needs_falling_basis():
    with pytest.raises(BasisMismatchError):
        transform_T_exact(ExactPoly.basis_element(2))
    with pytest.raises(BasisMismatchError):
        transform_T(LAGUERRE_REF, ExactPoly.basis_element(2, Basis.SHEFFER), 1)


def test_T_on_falling_basis():
    f = ExactPoly(Basis.FALLING_BETA, (1, 0, 3))
    assert transform_T(MEIXNER_FIRST_REF, f, 2).value == pytest.approx(13)
    assert transform_T_exact(f).basis is Basis.MONOMIAL


def test_curly_S_exact_basis():
    f = curly_S_exact(LAGUERRE_REF, ExactPoly.basis_element(2))
    assert f.basis is Basis.FALLING_BETA


# ==================== 定义域 ====================

def test_domain_predicates():
    assert in_domain(DomainKind.D_ABS, 0, LAGUERRE_REF)
    assert not in_domain(DomainKind.D_ABS, -1, LAGUERRE_REF)
    assert in_domain(DomainKind.D_ABS, -100 + 5j, MEIXNER_FIRST_REF)
    assert in_domain(DomainKind.PSI, 0, MEIXNER_SECOND_REF)
    assert DomainKind.from_name("psi") is DomainKind.PSI
    with pytest.raises(DomainError):
        DomainKind.from_name("nowhere")


def test_require_names_the_predicate():
    with pytest.raises(DomainError, match=r"Re\(αz\) > −σ/2 violated"):
        DomainPredicateSet(LAGUERRE_REF).require(DomainKind.D_ABS, -10)


# ==================== 相干态 ====================

@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_coherent_at_origin(params):
    for x in SUPPORT[params.family.value]:
        assert coherent_E(params, x, 0).value == pytest.approx(1.0)
        assert curly_E(params, x, 0) == pytest.approx(1.0)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@pytest.mark.parametrize("z", [0.5 + 0j, 1 + 0.5j])
def test_coherent_dual_path(params, z):
    for x in SUPPORT[params.family.value]:
        series = coherent_E(params, x, z)
        closed = coherent_E_closed(params, x, z)
        assert series.tail_bound <= 1e-10 * max(1.0, abs(series.value))
        assert rel_err(series.value, closed.value) < 1e-6


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_curly_E_series_is_finite_on_lattice(params):
    for x in SUPPORT[params.family.value]:
        for k in range(3):
            z = params.beta_c * k
            assert rel_err(curly_E_series(params, x, z).value, curly_E(params, x, z)) < 1e-8


def test_coherent_support():
    with pytest.raises(DomainError):
        coherent_E(LAGUERRE_REF, -1, 0.5)
    with pytest.raises(DomainError):
        coherent_E(MEIXNER_FIRST_REF, 0.5, 0.5)
    with pytest.raises(DomainError):
        curly_E(LAGUERRE_REF, 1.0, -10)


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@pytest.mark.parametrize("z", ["1", "1/2+i", "-2"])
def test_annihilator_eigenrelation(params, z):
    assert annihilator_eigen_check(params, gr(z), 8) == 0.0


def test_annihilator_needs_positive_truncation():
    with pytest.raises(DomainError):
        annihilator_eigen_check(LAGUERRE_REF, 1, 0)


# ==================== Fock 空间 ====================

def test_coherent_weight():
    assert coherent_weight(gr(1), gr(2), 2) == 12
    assert coherent_weight(gr(1), gr(1), 4) == 24 * 24


def test_kernel_exponential_limit():
    assert fock_kernel(0.0, 1.0, 1, 1).value == pytest.approx(cmath.e, rel=1e-12)
    z, w = 0.5 + 1j, -1 + 0.25j
    assert fock_kernel(0.0, 1.0, z, w).value == pytest.approx(cmath.exp(z.conjugate() * w), rel=1e-10)


def test_kernel_at_origin():
    assert fock_kernel(1.0, 2.0, 0, 3 + 4j).value == 1


@pytest.mark.parametrize("eta, sigma", [(-1.0, 1.0), (1.0, 0.0)])
def test_kernel_rejects_parameters(eta, sigma):
    with pytest.raises(DomainError):
        fock_kernel(eta, sigma, 1, 1)
    with pytest.raises(DomainError):
        FockElement((1,), eta, sigma)


@pytest.mark.parametrize("eta, sigma", [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)])
def test_kernel_gram_is_positive(eta, sigma):
    points = [0j, 1 + 1j, -1.5 + 0.2j, 0.3 - 2j, 2 + 0j]
    gap, min_eig = kernel_min_eigenvalue(kernel_gram(eta, sigma, points))
    assert gap < 1e-9
    assert min_eig > -1e-9


@pytest.mark.parametrize("eta, sigma", [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)])
def test_kernel_reproduces(eta, sigma):
    phi = FockElement((1, 0.5j, -2, 0.25, 1 - 1j, 3), eta, sigma)
    z = 0.7 - 1.1j
    assert fock_inner(phi, kernel_section(eta, sigma, z, 60)) == pytest.approx(phi(z), rel=1e-9)


def test_kernel_section_tail():
    section = kernel_section(1.0, 1.0, 2 + 0j, 40)
    assert 0 < section.tail_bound < 1e-12


def test_fock_inner_needs_same_space():
    with pytest.raises(DomainError):
        fock_inner(FockElement((1,), 1.0, 1.0), FockElement((1,), 1.0, 2.0))


def test_exact_norm_matches_float_norm():
    p = ExactPoly(Basis.MONOMIAL, (1, gr("1/2+i"), -3))
    exact = exact_fock_norm(p, gr(1), gr(2))
    assert FockElement.from_poly(p, 1.0, 2.0).norm_squared() == pytest.approx(exact.to_complex().real)


# ==================== 积分层 ====================

@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@pytest.mark.parametrize("z", [0.5 + 0j, 1 + 1j])
def test_S_integral_matches_coefficients(params, z):
    f = ExactPoly(Basis.SHEFFER, (0, 1, 2))
    tol = 1e-5 if params.is_meixner_second else 1e-6
    assert rel_err(transform_S_integral(params, f, z), transform_S(params, f, z).value) < tol


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_curly_S_integral(params):
    f = ExactPoly(Basis.SHEFFER, (1, 1, "1/2"))
    for z in CURLY_S_POINTS[params.family.value]:
        assert rel_err(transform_curlyS_integral(params, f, z), transform_curlyS(params, f, z)) < 1e-6


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@pytest.mark.parametrize("z", [1 + 0j, 2 + 1j])
def test_T_poisson(params, z):
    f = to_falling_beta(params, ExactPoly(Basis.MONOMIAL, (1, -1, 0, 1)))
    assert rel_err(transform_T_poisson(params, f, z), transform_T(params, f, z).value) < 1e-9


def test_rho_expectation_laguerre():
    f = ExactPoly.basis_element(2, Basis.SHEFFER)
    assert rel_err(rho_expectation(LAGUERRE_REF, f, 1 + 0.5j), (1 + 0.5j) ** 2) < 1e-6


def test_v_symbolic_on_constants():
    one = ExactPoly.constant(1)
    for params in REFERENCE_PARAMS:
        assert v_symbolic(params, one) == one


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
@pytest.mark.parametrize("z", [0j, 1 + 0j, -0.5 + 0j, 0.5 + 0.5j])
def test_v_integral_action(params, z):
    p = ExactPoly(Basis.MONOMIAL, (gr(1), gr("-1/2"), gr("i"), gr(2)))
    tol = 1e-5 if params.is_meixner_second else 1e-6
    assert rel_err(v_integral_action(params, p, z), evaluate(v_symbolic(params, p), z)) < tol


def test_v_symbolic_needs_monomials():
    with pytest.raises(BasisMismatchError):
        v_symbolic(LAGUERRE_REF, ExactPoly.basis_element(1, Basis.SHEFFER))


@pytest.mark.parametrize("params", REFERENCE_PARAMS, ids=ids)
def test_isometry(params):
    f = ExactPoly(Basis.SHEFFER, (1, gr("-1/2"), gr("1/3+i"), 2))
    numeric, target = isometry_pair(params, f)
    tol = 1e-5 if params.is_meixner_second else 1e-6
    assert rel_err(numeric, target) < tol


# ==================== Monte Carlo ====================

def test_monte_carlo_domain():
    f = ExactPoly.basis_element(2, Basis.SHEFFER)
    with pytest.raises(DomainError):
        monte_carlo_S(MEIXNER_FIRST_REF, f, 1.0)
    with pytest.raises(DomainError):
        monte_carlo_S(LAGUERRE_REF, f, -1.0)
    with pytest.raises(DomainError):
        monte_carlo_S(LAGUERRE_REF, f, 1.0, samples=1)


def test_monte_carlo_is_seeded():
    f = ExactPoly.basis_element(1, Basis.SHEFFER)
    a = monte_carlo_S(LAGUERRE_REF, f, 1.0, samples=1000, seed=7)
    b = monte_carlo_S(LAGUERRE_REF, f, 1.0, samples=1000, seed=7)
    assert a == b


def test_monte_carlo_sampling_scheme():
    # ξ ~ Poisson(z/β)，x ~ Gamma((ηξ+σ)/η, α)，用同一种子重放
    params = validate_params(2, 2, 3, "Laguerre")
    f = ExactPoly(Basis.MONOMIAL, (gr(0), gr(1)))
    z, seed, n = 1.5, 11, 2000
    rng = np.random.default_rng(seed)
    xi = rng.poisson(z / 2, n)
    x = rng.gamma((4 * xi + 3) / 4, 2)
    estimate = monte_carlo_S(params, f, z, samples=n, seed=seed, batch=n)
    assert estimate.mean == pytest.approx(float(x.mean()), rel=1e-12)


@pytest.mark.slow
def test_monte_carlo_estimate():
    # Laguerre(1,1,1)：(𝕊s_2)(1) = 1
    f = ExactPoly.basis_element(2, Basis.SHEFFER)
    estimate = monte_carlo_S(LAGUERRE_REF, f, 1.0, samples=1_000_000, seed=0)
    assert estimate.within(1.0, sigmas=4)
