"""
精确套件

所有比较都在高斯有理数上做相等判定。
"""
from __future__ import annotations

from math import comb
from typing import List

from core.combinat import GaussRational, gen_stirling, genfact, lah, stirling1, stirling2
from core.measures import norm_squared
from core.sheffer import (
    REFERENCE_PARAMS, Basis, ExactPoly, MeixnerParams, lower, poly_mul, raise_, sheffer_poly,
    shift, shifted_poly, to_monomial, to_sheffer, to_sheffer_by_solve, expand_monomial_in_shifted,
)
from core.transforms import annihilator_eigen_check, composition_check
from core.verify.registry import CheckContext, check
from core.verify.report import ReportRow, exact_row
from core.weylalg import (
    Generator, Power, Product, concrete_realization_check, conjugation_check,
    factorization_check, falling_alpha_beta_moment, falling_moment_via_moments,
    lowering_on_falling_check, normal_order, normal_order_by_words, random_strategy, random_word,
    raw_moments, rho_transfer_check, script_r_iterated, script_r_on_one, uv_power_closed_form,
    vn_u_relation_check, word_to_expr,
)


def _label(params: MeixnerParams) -> str:
    return params.family.value


def _random_poly(ctx: CheckContext, degree: int, basis: Basis = Basis.MONOMIAL) -> ExactPoly:
    return ExactPoly(basis, tuple(ctx.gauss_rational() for _ in range(degree + 1)))


# ==================== combinat ====================

@check("exact", "stirling.orthogonality")
def _stirling_orthogonality(ctx: CheckContext) -> List[ReportRow]:
    """Σ_k S(n,k) s(k,m) = δ_{nm}"""
    rows = []
    for n in range(13):
        actual = [sum(stirling2(n, k) * stirling1(k, m) for k in range(m, n + 1)) for m in range(n + 1)]
        expected = [int(m == n) for m in range(n + 1)]
        rows.append(exact_row(f"exact.stirling.orthogonality.n={n:02d}", {'n': n}, expected, actual))
    return rows


@check("exact", "stirling.lah")
def _lah_consistency(ctx: CheckContext) -> List[ReportRow]:
    """L(n,k) = Σ_j |s(n,j)| S(j,k)"""
    rows = []
    for n in range(1, 11):
        expected = [lah(n, k) for k in range(1, n + 1)]
        actual = [sum(abs(stirling1(n, j)) * stirling2(j, k) for j in range(k, n + 1))
                  for k in range(1, n + 1)]
        rows.append(exact_row(f"exact.stirling.lah.n={n:02d}", {'n': n}, expected, actual))
    return rows


@check("exact", "combinat.gen_stirling_expansion")
def _gen_stirling_expansion(ctx: CheckContext) -> List[ReportRow]:
    """(z+r|h)_n = Σ_k S(n,k;h,r) (z|−h)_k"""
    rows = []
    for trial in range(10):
        z, h, r = ctx.gauss_rational(), ctx.gauss_rational(), ctx.gauss_rational()
        n = ctx.rng.randint(0, 7)
        expected = genfact(z + r, h, n)
        actual = GaussRational.zero()
        for k in range(n + 1):
            actual = actual + gen_stirling(n, k, h, r) * genfact(z, -h, k)
        rows.append(exact_row(f"exact.combinat.gen_stirling_expansion.{trial:02d}",
                              {'z': z, 'h': h, 'r': r, 'n': n}, expected, actual))
    return rows


@check("exact", "combinat.genfact_binomial")
def _genfact_binomial(ctx: CheckContext) -> List[ReportRow]:
    """(x+y|h)_n = Σ C(n,k) (x|h)_k (y|h)_{n−k}"""
    rows = []
    for trial in range(10):
        x, y, h = ctx.gauss_rational(), ctx.gauss_rational(), ctx.gauss_rational()
        n = ctx.rng.randint(0, 8)
        actual = GaussRational.zero()
        for k in range(n + 1):
            actual = actual + comb(n, k) * genfact(x, h, k) * genfact(y, h, n - k)
        rows.append(exact_row(f"exact.combinat.genfact_binomial.{trial:02d}",
                              {'x': x, 'y': y, 'h': h, 'n': n}, genfact(x + y, h, n), actual))
    return rows


# ==================== sheffer ====================

@check("exact", "sheffer.orthogonality")
def _recurrence_orthogonality(ctx: CheckContext) -> List[ReportRow]:
    """Φ(s_m s_n) = δ_{mn} n!(σ|−η)_n，Φ 为精确矩泛函"""
    rows = []
    for params in REFERENCE_PARAMS:
        for n in range(5):
            for m in range(n + 1):
                product = poly_mul(sheffer_poly(params, m), sheffer_poly(params, n))
                actual = GaussRational.zero()
                for k, c in enumerate(product.coeffs):
                    actual = actual + c * raw_moments(params, k)
                expected = norm_squared(params, n) if m == n else GaussRational.zero()
                rows.append(exact_row(f"exact.sheffer.orthogonality.{_label(params)}.{m}.{n}",
                                      {'m': m, 'n': n}, expected, actual))
    return rows


@check("exact", "sheffer.shift_relation")
def _shift_relation(ctx: CheckContext) -> List[ReportRow]:
    """s_n(x) = p_n(x + shift)"""
    rows = []
    for params in REFERENCE_PARAMS:
        for n in range(9):
            rows.append(exact_row(f"exact.sheffer.shift_relation.{_label(params)}.n={n}", {'n': n},
                                  sheffer_poly(params, n), shift(shifted_poly(params, n), params.shift)))
    return rows


@check("exact", "sheffer.ladder_commutator")
def _ladder_commutator(ctx: CheckContext) -> List[ReportRow]:
    """[∂⁻, ∂⁺] = 1"""
    rows = []
    for params in REFERENCE_PARAMS:
        for trial in range(3):
            p = _random_poly(ctx, ctx.rng.randint(0, 6), Basis.SHEFFER)
            actual = lower(params, raise_(params, p)) - raise_(params, lower(params, p))
            rows.append(exact_row(f"exact.sheffer.ladder_commutator.{_label(params)}.{trial}",
                                  {'p': p}, p, actual))
    return rows


@check("exact", "sheffer.basis_vs_solve")
def _basis_vs_solve(ctx: CheckContext) -> List[ReportRow]:
    """附录闭式的基变换与三角求解一致"""
    rows = []
    for params in REFERENCE_PARAMS:
        for trial in range(4):
            p = _random_poly(ctx, ctx.rng.randint(0, 8))
            rows.append(exact_row(f"exact.sheffer.basis_vs_solve.{_label(params)}.{trial}", {'p': p},
                                  to_sheffer_by_solve(params, p), to_sheffer(params, p)))
    return rows


@check("exact", "sheffer.appendix_expansion")
def _appendix_expansion(ctx: CheckContext) -> List[ReportRow]:
    """zⁿ = Σ c_{n,i} p_i，且 p_n 的单项式闭式与递推一致"""
    rows = []
    for params in REFERENCE_PARAMS:
        for n in range(9):
            recombined = ExactPoly.zero()
            for i, c in enumerate(expand_monomial_in_shifted(params, n)):
                recombined = recombined + shifted_poly(params, i).scale(c)
            rows.append(exact_row(f"exact.sheffer.appendix_expansion.monomial.{_label(params)}.n={n}",
                                  {'n': n}, ExactPoly.basis_element(n), recombined))
            s_n = ExactPoly.basis_element(n, Basis.SHEFFER)
            rows.append(exact_row(f"exact.sheffer.appendix_expansion.sheffer.{_label(params)}.n={n}",
                                  {'n': n}, sheffer_poly(params, n), to_monomial(params, s_n)))
    return rows


# ==================== weylalg ====================

@check("exact", "weylalg.uv_power_closed_form")
def _uv_power(ctx: CheckContext) -> List[ReportRow]:
    """(UV)ⁿ 的闭式与改写引擎一致"""
    rows = []
    for trial in range(20):
        a, b = ctx.gauss_rational(), ctx.gauss_rational()
        for n in range(9):
            expr = Power(Product(Generator('U'), Generator('V')), n)
            rows.append(exact_row(f"exact.weylalg.uv_power_closed_form.{trial:02d}.n={n}",
                                  {'a': a, 'b': b, 'n': n},
                                  uv_power_closed_form(n, a, b), normal_order(expr, a, b)))
    return rows


@check("exact", "weylalg.vn_u")
def _vn_u(ctx: CheckContext) -> List[ReportRow]:
    """VⁿU = (U + na)Vⁿ + nbV^{n−1}"""
    rows = []
    for trial in range(20):
        a, b = ctx.gauss_rational(), ctx.gauss_rational()
        for n in range(1, 11):
            rows.append(exact_row(f"exact.weylalg.vn_u.{trial:02d}.n={n:02d}",
                                  {'a': a, 'b': b, 'n': n}, True, vn_u_relation_check(n, a, b)))
    return rows


@check("exact", "weylalg.confluence")
def _confluence(ctx: CheckContext) -> List[ReportRow]:
    """任意改写顺序得到同一正规形"""
    rows = []
    for trial in range(20):
        a, b = ctx.gauss_rational(), ctx.gauss_rational()
        word = random_word(ctx.rng)
        expr = word_to_expr(word)
        actual = normal_order_by_words(expr, a, b, random_strategy(ctx.rng))
        rows.append(exact_row(f"exact.weylalg.confluence.{trial:02d}",
                              {'word': "".join(word) or "1", 'a': a, 'b': b},
                              normal_order(expr, a, b), actual))
    return rows


@check("exact", "weylalg.concrete_realization")
def _concrete_realization(ctx: CheckContext) -> List[ReportRow]:
    """a=β, b=α−β 的正规形在 Sheffer 基表示下与原式一致"""
    rows = []
    for params in REFERENCE_PARAMS:
        for trial in range(4):
            word = random_word(ctx.rng, max_len=6)
            m = ctx.rng.randint(0, 3)
            rows.append(exact_row(f"exact.weylalg.concrete_realization.{_label(params)}.{trial}",
                                  {'word': "".join(word) or "1", 'm': m}, True,
                                  concrete_realization_check(params, word_to_expr(word), m)))
    return rows


@check("exact", "weylalg.operator_identities")
def _operator_identities(ctx: CheckContext) -> List[ReportRow]:
    """分解、共轭与 ρ 转移"""
    rows = []
    for params in REFERENCE_PARAMS:
        for trial in range(3):
            p = _random_poly(ctx, ctx.rng.randint(0, 5))
            q = _random_poly(ctx, ctx.rng.randint(0, 5), Basis.SHEFFER)
            tag = f"{_label(params)}.{trial}"
            rows.append(exact_row(f"exact.weylalg.factorization.{tag}", {'p': p}, True,
                                  factorization_check(params, p)))
            rows.append(exact_row(f"exact.weylalg.conjugation.{tag}", {'p': p}, True,
                                  conjugation_check(params, p)))
            rows.append(exact_row(f"exact.weylalg.rho_transfer.{tag}", {'p': q}, True,
                                  rho_transfer_check(params, q)))
    return rows


@check("exact", "weylalg.moment_identities")
def _moment_identities(ctx: CheckContext) -> List[ReportRow]:
    """𝓡ⁿ1 闭式、下降 (α−β) 阶乘矩与 ∂⁻ 在 (·|α−β)_n 上的作用"""
    rows = []
    for params in REFERENCE_PARAMS:
        for n in range(9):
            tag = f"{_label(params)}.n={n}"
            rows.append(exact_row(f"exact.weylalg.script_r_iteration.{tag}", {'n': n},
                                  script_r_iterated(params, n), script_r_on_one(params, n)))
            rows.append(exact_row(f"exact.weylalg.falling_moment.{tag}", {'n': n},
                                  falling_alpha_beta_moment(params, n),
                                  falling_moment_via_moments(params, n)))
            rows.append(exact_row(f"exact.weylalg.lowering_on_falling.{tag}", {'n': n}, True,
                                  lowering_on_falling_check(params, n)))
    return rows


# ==================== transforms ====================

@check("exact", "transforms.annihilator_eigen")
def _annihilator_eigen(ctx: CheckContext) -> List[ReportRow]:
    """A⁻E_N(·,z) = zE_{N−1}(·,z)"""
    rows = []
    for params in REFERENCE_PARAMS:
        for n_max in range(1, 6):
            z = ctx.gauss_rational()
            rows.append(exact_row(f"exact.transforms.annihilator_eigen.{_label(params)}.N={n_max}",
                                  {'z': z, 'N': n_max}, 0.0, annihilator_eigen_check(params, z, n_max)))
    return rows


@check("exact", "transforms.composition")
def _composition(ctx: CheckContext) -> List[ReportRow]:
    """𝕊 = 𝕋∘𝓢，系数级相等"""
    rows = []
    for params in REFERENCE_PARAMS:
        for degree in range(7):
            f = _random_poly(ctx, degree, Basis.SHEFFER)
            rows.append(exact_row(f"exact.transforms.composition.{_label(params)}.deg={degree}",
                                  {'f': f}, True, composition_check(params, f)))
    return rows
