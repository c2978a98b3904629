"""
数值套件

每行单独捕获库错误，求积失败只让该行失败。
"""
from __future__ import annotations

import cmath
import math
from math import comb
from typing import Callable, List, Tuple

import scipy.special as sc

from core.combinat import genfact, stirling2
from core.errors import SBError
from core.measures import (
    bessel_k, bessel_k_series, complex_gamma, complex_loggamma, falling_moment_numeric,
    fock_density_paths, fock_moment, mellin_convolution_check, numeric_moment,
    orthogonality_check, poisson_falling_identity, touchard_moment, norm_squared,
)
from core.sheffer import (
    REFERENCE_PARAMS, Basis, ExactPoly, MeixnerClass, MeixnerParams, evaluate, to_falling_beta,
)
from core.transforms import (
    FockElement, coherent_E, coherent_E_closed, coherent_weight, curly_E, curly_E_series,
    fock_inner, fock_kernel, isometry_pair, kernel_gram, kernel_min_eigenvalue, kernel_section,
    rho_expectation, transform_curlyS, transform_curlyS_integral, transform_S,
    transform_S_integral, transform_T, transform_T_poisson, v_integral_action, v_symbolic,
)
from core.verify.registry import CheckContext, check
from core.verify.report import ReportRow, error_row, numeric_row
from core.weylalg import falling_alpha_beta_moment, raw_moments

FOCK_PARAMS = ((1.0, 1.0), (1.0, 2.0), (2.0, 1.0))


def _label(params: MeixnerParams) -> str:
    return params.family.value


def _tol(params: MeixnerParams, base: float, second: float) -> float:
    return second if params.is_meixner_second else base


def _row(rows: List[ReportRow], test_id: str, inputs: dict,
         compute: Callable[[], Tuple[complex, complex]], tolerance: float, metric: str = "rel"):
    """compute() 返回 (expected, actual)"""
    try:
        expected, actual = compute()
    except SBError as exc:
        rows.append(error_row(test_id, inputs, exc, metric))
        return
    rows.append(numeric_row(test_id, inputs, expected, actual, tolerance, metric))


# 各族的测试点
_SUPPORT_POINTS = {
    MeixnerClass.LAGUERRE: (0.5, 1.0, 2.0),
    MeixnerClass.MEIXNER_FIRST: (0.0, 1.0, 2.0),
    MeixnerClass.MEIXNER_SECOND: (-1.0, 0.0, 1.0),
}
_CURLY_S_POINTS = {
    MeixnerClass.LAGUERRE: (0j, 0.5 + 0j, 1 + 0.5j),
    MeixnerClass.MEIXNER_FIRST: (0j, 0.5 + 0j, 1 + 0.5j),
    MeixnerClass.MEIXNER_SECOND: (0j, 0.25 + 0j, 0.5 - 0.25j),
}


# ==================== 测度 ====================

@check("numeric", "measures.moment_oracle")
def _moment_oracle(ctx: CheckContext) -> List[ReportRow]:
    rows = []
    for params in REFERENCE_PARAMS:
        top = 6 if params.is_meixner_second else 8
        tol = _tol(params, 1e-8, 1e-6)
        for n in range(top + 1):
            _row(rows, f"numeric.measures.moment_oracle.{_label(params)}.n={n}", {'n': n},
                 lambda: (raw_moments(params, n).to_complex(), numeric_moment(params, n, ctx.cfg).value),
                 tol)
    return rows


@check("numeric", "measures.falling_moment")
def _falling_moment(ctx: CheckContext) -> List[ReportRow]:
    """∫(y|α−β)_n dμ = βⁿ(σ/η)^{(n)}"""
    rows = []
    for params in REFERENCE_PARAMS:
        tol = _tol(params, 1e-8, 1e-6)
        for n in range(7):
            _row(rows, f"numeric.measures.falling_moment.{_label(params)}.n={n}", {'n': n},
                 lambda: (falling_alpha_beta_moment(params, n).to_complex(),
                          falling_moment_numeric(params, n, ctx.cfg).value),
                 tol)
    return rows


@check("numeric", "measures.orthogonality")
def _orthogonality(ctx: CheckContext) -> List[ReportRow]:
    """非对角元按 √(‖s_m‖²‖s_n‖²) 归一化后取绝对误差"""
    rows = []
    for params in REFERENCE_PARAMS:
        tol = _tol(params, 1e-6, 1e-5)
        for n in range(6):
            for m in range(n + 1):
                test_id = f"numeric.measures.orthogonality.{_label(params)}.{m}.{n}"
                scale = math.sqrt(abs(norm_squared(params, m).to_complex() * norm_squared(params, n).to_complex()))

                def compute(m=m, n=n, scale=scale):
                    value, expected = orthogonality_check(params, m, n, ctx.cfg)
                    return expected.to_complex() / scale, value / scale

                _row(rows, test_id, {'m': m, 'n': n}, compute, tol, "rel" if m == n else "abs")
    return rows


@check("numeric", "measures.complex_parameter")
def _complex_parameter(ctx: CheckContext) -> List[ReportRow]:
    """复参数 ζ 下 μ_{α,β,ζ} 的矩与矩公式的解析延拓一致"""
    rows = []
    for params in REFERENCE_PARAMS:
        zeta = params.sigma_f + 0.5j
        for n in range(5):
            _row(rows, f"numeric.measures.complex_parameter.{_label(params)}.n={n}",
                 {'zeta': zeta, 'n': n},
                 lambda: (_continued_raw_moment(params, zeta, n),
                          numeric_moment(params, n, ctx.cfg, zeta).value),
                 1e-6)
    return rows


def _continued_raw_moment(params: MeixnerParams, zeta: complex, n: int) -> complex:
    alpha, beta = params.alpha_c, params.beta_c
    d = alpha - beta
    r = zeta / alpha

    def shifted(k: int) -> complex:
        if k == 0:
            return 1 + 0j
        return sum(d ** (k - j) * stirling2(k, j) * genfact(r, -beta, j) for j in range(1, k + 1))

    if not params.is_meixner_second:
        return shifted(n)
    return sum(comb(n, k) * (-r) ** (n - k) * shifted(k) for k in range(n + 1))


@check("numeric", "measures.fock")
def _fock(ctx: CheckContext) -> List[ReportRow]:
    """Λ_{η,σ} 的径向矩与两条密度路径"""
    rows = []
    for eta, sigma in FOCK_PARAMS:
        tag = f"eta={eta:g}.sigma={sigma:g}"
        for n in range(6):
            _row(rows, f"numeric.measures.fock_moment.{tag}.n={n}", {'eta': eta, 'sigma': sigma, 'n': n},
                 lambda: (coherent_weight(eta, sigma, n), fock_moment(eta, sigma, n, n, ctx.cfg)),
                 1e-6)
        _row(rows, f"numeric.measures.fock_moment.{tag}.off_diagonal", {'eta': eta, 'sigma': sigma},
             lambda: (0j, fock_moment(eta, sigma, 2, 1, ctx.cfg)), 1e-6, "abs")
        for r in (0.1, 0.5, 1.0, 2.0, 4.0):
            _row(rows, f"numeric.measures.fock_density.{tag}.r={r:g}", {'eta': eta, 'sigma': sigma, 'r': r},
                 lambda: fock_density_paths(eta, sigma, r), 1e-6)
    return rows


@check("numeric", "measures.mellin")
def _mellin(ctx: CheckContext) -> List[ReportRow]:
    """πσΛ_{σ,σ}(√r) = ∫ e^{−r/t−t/σ} dt/t"""
    rows = []
    for sigma in (1.0, 2.0):
        for r in (0.25, 1.0, 3.0):
            _row(rows, f"numeric.measures.mellin.sigma={sigma:g}.r={r:g}", {'sigma': sigma, 'r': r},
                 lambda: tuple(reversed(mellin_convolution_check(sigma, r, ctx.cfg))), 1e-6)
    return rows


@check("numeric", "measures.poisson")
def _poisson(ctx: CheckContext) -> List[ReportRow]:
    """∫(ξ)_n dπ_ζ = ζⁿ 与 Touchard 多项式"""
    rows = []
    for zeta in (0.5 + 0j, 2 + 1j, -1 + 0.5j):
        for n in range(6):
            inputs = {'zeta': zeta, 'n': n}
            _row(rows, f"numeric.measures.poisson_falling.zeta={zeta}.n={n}", inputs,
                 lambda: tuple(reversed(poisson_falling_identity(zeta, n, ctx.cfg))), 1e-9)
            _row(rows, f"numeric.measures.touchard.zeta={zeta}.n={n}", inputs,
                 lambda: tuple(reversed(touchard_moment(zeta, n, ctx.cfg))), 1e-9)
    return rows


@check("numeric", "measures.special_functions")
def _special_functions(ctx: CheckContext) -> List[ReportRow]:
    """Γ 与 K_θ 对照 scipy.special"""
    rows = []
    for z in (0.5 + 0j, 3.7 + 0j, 1 + 2j, -2.5 + 0.5j, 0.2 - 7j):
        _row(rows, f"numeric.special.gamma.z={z}", {'z': z},
             lambda: (complex(sc.gamma(z)), complex_gamma(z)), 1e-10)
        _row(rows, f"numeric.special.loggamma.z={z}", {'z': z},
             lambda: (cmath.exp(complex(sc.loggamma(z))), cmath.exp(complex_loggamma(z))), 1e-10)
    _row(rows, "numeric.special.gamma.half", {}, lambda: (math.sqrt(math.pi), complex_gamma(0.5)), 1e-12)
    for theta in (0.0, 0.5, 1.0, 1.3, 2.0):
        for x in (0.5, 2.0, 5.0):
            inputs = {'theta': theta, 'x': x}
            tag = f"theta={theta:g}.x={x:g}"
            _row(rows, f"numeric.special.bessel_k.integral.{tag}", inputs,
                 lambda: (float(sc.kv(theta, x)), bessel_k(theta, x)), 1e-10)
            _row(rows, f"numeric.special.bessel_k.series.{tag}", inputs,
                 lambda: (float(sc.kv(theta, x)), bessel_k_series(theta, x)), 1e-8)
    return rows


# ==================== 相干态与变换 ====================

@check("numeric", "transforms.coherent_dual_path")
def _coherent_dual_path(ctx: CheckContext) -> List[ReportRow]:
    """级数 E(x,z) 与 Poisson 混合闭式"""
    rows = []
    for params in REFERENCE_PARAMS:
        for x in _SUPPORT_POINTS[params.family]:
            for z in (0.5 + 0j, 1 + 0j, 1 + 0.5j):
                _row(rows, f"numeric.transforms.coherent_dual_path.{_label(params)}.x={x:g}.z={z}",
                     {'x': x, 'z': z},
                     lambda: (coherent_E_closed(params, x, z, ctx.cfg).value, coherent_E(params, x, z).value),
                     1e-6)
    return rows


@check("numeric", "transforms.curly_E")
def _curly_E(ctx: CheckContext) -> List[ReportRow]:
    """𝓔 的闭式与级数；z ∈ βℕ₀ 时级数有限"""
    rows = []
    for params in REFERENCE_PARAMS:
        for x in _SUPPORT_POINTS[params.family]:
            for k in range(3):
                z = params.beta_c * k
                _row(rows, f"numeric.transforms.curly_E.{_label(params)}.x={x:g}.k={k}", {'x': x, 'z': z},
                     lambda: (curly_E_series(params, x, z).value, curly_E(params, x, z)), 1e-8)
    return rows


# s_0 + s_1 + s_2/2
_SAMPLE_F = ExactPoly(Basis.SHEFFER, (1, 1, "1/2"))


@check("numeric", "transforms.S_integral")
def _s_integral(ctx: CheckContext) -> List[ReportRow]:
    """∫ f E(·,z) dμ = Σ f_n zⁿ"""
    rows = []
    f = ExactPoly(Basis.SHEFFER, (0, 1, 2))
    for params in REFERENCE_PARAMS:
        for z in (0.5 + 0j, 1 + 1j):
            _row(rows, f"numeric.transforms.S_integral.{_label(params)}.z={z}", {'f': f, 'z': z},
                 lambda: (transform_S(params, f, z).value, transform_S_integral(params, f, z, ctx.cfg)),
                 _tol(params, 1e-6, 1e-5))
    return rows


@check("numeric", "transforms.curlyS_integral")
def _curly_s_integral(ctx: CheckContext) -> List[ReportRow]:
    rows = []
    for params in REFERENCE_PARAMS:
        f = _SAMPLE_F
        for z in _CURLY_S_POINTS[params.family]:
            _row(rows, f"numeric.transforms.curlyS_integral.{_label(params)}.z={z}", {'f': f, 'z': z},
                 lambda: (transform_curlyS(params, f, z), transform_curlyS_integral(params, f, z, ctx.cfg)),
                 1e-6)
    return rows


@check("numeric", "transforms.T_poisson")
def _t_poisson(ctx: CheckContext) -> List[ReportRow]:
    rows = []
    for params in REFERENCE_PARAMS:
        f = to_falling_beta(params, ExactPoly(Basis.MONOMIAL, (1, -1, 0, 1)))
        for z in (1 + 0j, 2 + 1j):
            _row(rows, f"numeric.transforms.T_poisson.{_label(params)}.z={z}", {'f': f, 'z': z},
                 lambda: (transform_T(params, f, z).value, transform_T_poisson(params, f, z, ctx.cfg)),
                 1e-9)
    return rows


@check("numeric", "transforms.rho_expectation")
def _rho_expectation(ctx: CheckContext) -> List[ReportRow]:
    """随机测度 ρ 的双重积分与 𝕊"""
    rows = []
    for params in REFERENCE_PARAMS:
        if params.is_meixner_second:
            points = (params.beta_c, 2 * params.beta_c)
        else:
            points = (1 + 0j, 1 + 0.5j)
        for n in range(4):
            f = ExactPoly.basis_element(n, Basis.SHEFFER)
            for z in points:
                _row(rows, f"numeric.transforms.rho_expectation.{_label(params)}.n={n}.z={z}",
                     {'n': n, 'z': z},
                     lambda: (transform_S(params, f, z).value, rho_expectation(params, f, z, ctx.cfg)),
                     1e-6)
    return rows


@check("numeric", "transforms.v_integral")
def _v_integral(ctx: CheckContext) -> List[ReportRow]:
    """V 的积分表示与 Sheffer 基上的符号 V"""
    rows = []
    points = (0j, 1 + 0j, -0.5 + 0j, 0.5 + 0.5j, 2j)
    for params in REFERENCE_PARAMS:
        for trial in range(2):
            p = ExactPoly(Basis.MONOMIAL, tuple(ctx.gauss_rational(3, 3) for _ in range(ctx.rng.randint(1, 6))))
            symbolic = v_symbolic(params, p)
            for z in points:
                _row(rows, f"numeric.transforms.v_integral.{_label(params)}.{trial}.z={z}", {'p': p, 'z': z},
                     lambda: (evaluate(symbolic, z), v_integral_action(params, p, z, ctx.cfg)),
                     _tol(params, 1e-6, 1e-5))
    return rows


@check("numeric", "transforms.isometry")
def _isometry(ctx: CheckContext) -> List[ReportRow]:
    """‖f‖²_{L²(μ)} = Σ|f_n|² n!(σ|−η)_n = ‖𝓢f‖²_𝓕"""
    rows = []
    for params in REFERENCE_PARAMS:
        for degree in range(6):
            f = ExactPoly(Basis.SHEFFER, tuple(ctx.gauss_rational(3, 2) for _ in range(degree + 1)))
            _row(rows, f"numeric.transforms.isometry.{_label(params)}.deg={degree}", {'f': f},
                 lambda: tuple(reversed(isometry_pair(params, f, ctx.cfg))),
                 _tol(params, 1e-6, 1e-5))
    return rows


@check("numeric", "transforms.kernel")
def _kernel(ctx: CheckContext) -> List[ReportRow]:
    """𝕂 的 Gram 矩阵半正定、再生性与 η=0 的指数形式"""
    rows = []
    for eta, sigma in FOCK_PARAMS:
        tag = f"eta={eta:g}.sigma={sigma:g}"
        points = [complex(ctx.rng.uniform(-2, 2), ctx.rng.uniform(-2, 2)) for _ in range(5)]
        try:
            gap, min_eig = kernel_min_eigenvalue(kernel_gram(eta, sigma, points))
        except SBError as exc:
            rows.append(error_row(f"numeric.transforms.kernel_positivity.{tag}", {}, exc, "abs"))
        else:
            rows.append(numeric_row(f"numeric.transforms.kernel_hermitian.{tag}", {}, 0.0, gap, 1e-9, "abs"))
            rows.append(numeric_row(f"numeric.transforms.kernel_positivity.{tag}", {'min_eig': min_eig},
                                    0.0, min(min_eig, 0.0), 1e-9, "abs"))

        phi = FockElement(tuple(complex(ctx.rng.uniform(-1, 1), ctx.rng.uniform(-1, 1)) for _ in range(6)),
                          eta, sigma)
        z = points[0]
        _row(rows, f"numeric.transforms.kernel_reproducing.{tag}", {'z': z},
             lambda: (phi(z), fock_inner(phi, kernel_section(eta, sigma, z, 60))), 1e-9)

    for z, w in ((1 + 0j, 1 + 0j), (0.5 + 1j, -1 + 0.25j)):
        _row(rows, f"numeric.transforms.kernel_exponential.z={z}.w={w}", {'z': z, 'w': w},
             lambda: (cmath.exp(z.conjugate() * w), fock_kernel(0.0, 1.0, z, w).value), 1e-10)
    return rows
