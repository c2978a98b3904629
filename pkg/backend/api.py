"""
计算 API
把 core 层的多项式、正规序、矩与求值能力整理成表格，供 CLI 输出
"""
import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from core.combinat import GaussRational
from core.errors import ConvergenceError, DomainError
from core.measures import QuadConfig, density, numeric_moment, orthogonality_measure
from core.sheffer import Basis, ExactPoly, MeixnerParams, convert, shifted_poly, sheffer_poly
from core.transforms import (
    coherent_E, fock_kernel, transform_curlyS, transform_S, transform_T,
)
from core.utils.logger import logger
from core.verify import fmt_number
from core.weylalg import NormalForm, normal_order, parse_operator, raw_moments

MAX_POLY_DEGREE = 64
MAX_MOMENT_ORDER = 12

EVAL_TARGETS = ("coherent", "kernel", "transform-S", "transform-curlyS", "transform-T", "density")
BASES = {"monomial": Basis.MONOMIAL, "falling": Basis.FALLING_BETA, "sheffer": Basis.SHEFFER}
POLY_SOURCES = ("s", "p", "x")

GRID_HEADER = ["x", "z_re", "z_im", "value_re", "value_im"]


@dataclass
class Table:
    """表头 + 行，单元格均已是字符串"""
    header: List[str]
    rows: List[List[str]] = field(default_factory=list)


@dataclass(frozen=True)
class EvalRequest:
    """一次求值的全部参数；未给出的点取默认值"""
    what: str
    x: Optional[complex] = None
    z: Optional[complex] = None
    w: Optional[complex] = None
    coeffs: Sequence[GaussRational] = (GaussRational.one(),)
    eta: Optional[float] = None
    sigma: Optional[float] = None
    zeta: Optional[complex] = None


def parse_coeffs(text: str) -> List[GaussRational]:
    """"1,-1/2,3/2+i" → 系数列表（按指标升序）"""
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise DomainError("--coeffs 不能为空")
    return [GaussRational.parse(t) for t in items]


def parse_grid(text: str) -> np.ndarray:
    """
    "a:b:n" → n 个等距点

    Raises:
        DomainError: 格式错误或 n < 1
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"网格需要 a:b:n 形式，收到 {text!r}")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise DomainError(f"网格需要 a:b:n 形式，收到 {text!r}") from e
    if n < 1:
        raise DomainError(f"网格点数 n={n} 必须 ≥ 1")
    return np.linspace(a, b, n)


class API:
    """
    计算 API
    每个方法记录一条 INFO 日志；库异常记录后原样抛出，由 CLI 映射为退出码
    """

    def __init__(self, params: MeixnerParams, quad: QuadConfig = QuadConfig()):
        self.params = params
        self.quad = quad
        logger.info(f"API 初始化完成: {params.family.value}(α={params.alpha}, β={params.beta}, σ={params.sigma})")

    # ==================== 多项式 API ====================

    def poly(self, n: int, basis: str = "monomial", of: Optional[str] = None) -> Table:
        """
        s_n / p_n / xⁿ 在指定基下的系数，按指标降序

        of 缺省时：sheffer 基取 x，其余取 s。
        """
        try:
            if not 0 <= n <= MAX_POLY_DEGREE:
                raise DomainError(f"poly: 需要 0 ≤ n ≤ {MAX_POLY_DEGREE}，收到 n={n}")
            if basis not in BASES:
                raise DomainError(f"未知的基: {basis}")
            of = of or ("x" if basis == "sheffer" else "s")
            if of not in POLY_SOURCES:
                raise DomainError(f"--of 只接受 {POLY_SOURCES}，收到 {of!r}")
            logger.info(f"poly: n={n}, basis={basis}, of={of}")

            if of == "s":
                p = sheffer_poly(self.params, n)
            elif of == "p":
                p = shifted_poly(self.params, n)
            else:
                p = ExactPoly.basis_element(n, Basis.MONOMIAL)
            q = convert(self.params, p, BASES[basis])
            coeffs = q.padded(max(q.degree, 0) + 1)
            rows = [[str(i), str(coeffs[i])] for i in reversed(range(len(coeffs)))]
            return Table(["index", "coefficient"], rows)
        except Exception as e:
            logger.error(f"poly 失败: {e}")
            raise

    # ==================== 正规序 API ====================

    def normal_order(self, expr: str, a: str = "1", b: str = "0") -> NormalForm:
        """解析表达式并在 [V,U] = aV + b 下化为正规序"""
        try:
            logger.info(f"normal-order: {expr!r}, a={a}, b={b}")
            node = parse_operator(expr)
            return normal_order(node, GaussRational.parse(a), GaussRational.parse(b))
        except Exception as e:
            logger.error(f"normal-order 失败: {e}")
            raise

    # ==================== 矩 API ====================

    def moments(self, n_max: int) -> Table:
        """
        精确矩与求积矩对照

        单行求积不收敛时该行 status=error，其余行照常输出。
        """
        try:
            if not 0 <= n_max <= MAX_MOMENT_ORDER:
                raise DomainError(f"moments: 需要 0 ≤ n_max ≤ {MAX_MOMENT_ORDER}，收到 {n_max}")
            logger.info(f"moments: n_max={n_max}")
            rows = []
            for n in range(n_max + 1):
                exact = raw_moments(self.params, n)
                try:
                    value = numeric_moment(self.params, n, self.quad).value
                except ConvergenceError as e:
                    logger.warning(f"n={n} 求积未收敛: {e}")
                    rows.append([str(n), str(exact), "", "", "error"])
                    continue
                target = exact.to_complex()
                err = abs(value - target) / abs(target) if target != 0 else abs(value - target)
                shown = fmt_number(value.real) if exact.is_real else fmt_number(value)
                rows.append([str(n), str(exact), shown, fmt_number(err), "ok"])
            return Table(["n", "exact", "numeric", "rel_err", "status"], rows)
        except Exception as e:
            logger.error(f"moments 失败: {e}")
            raise

    # ==================== 求值 API ====================

    def evaluate(self, req: EvalRequest) -> complex:
        """
        单点求值

        Raises:
            DomainError: 点不在相应定义域内（消息给出被违反的谓词）
        """
        try:
            logger.info(f"eval: what={req.what}, x={req.x}, z={req.z}, w={req.w}")
            return self._evaluate(req)
        except Exception as e:
            logger.error(f"eval 失败: {e}")
            raise

    def evaluate_grid(self, req: EvalRequest, xs: Optional[Sequence[float]] = None,
                      z_re: Optional[Sequence[float]] = None,
                      z_im: Optional[Sequence[float]] = None) -> Table:
        """
        网格求值，输出 x,z_re,z_im,value_re,value_im

        未给网格的坐标取 req 中的单点；x 对 kernel 与变换无意义，该列留空。
        定义域外的格点输出 nan。
        """
        try:
            z0 = complex(req.z if req.z is not None else 0)
            xs = list(xs) if xs is not None else [req.x]
            res = list(z_re) if z_re is not None else [z0.real]
            ims = list(z_im) if z_im is not None else [z0.imag]
            uses_x = req.what in ("coherent", "density")
            uses_z = req.what != "density"
            logger.info(f"eval 网格: what={req.what}, {len(xs)}×{len(res)}×{len(ims)} 点")

            rows = []
            for x, zr, zi in itertools.product(xs if uses_x else [None],
                                               res if uses_z else [None],
                                               ims if uses_z else [None]):
                z = complex(zr, zi) if uses_z else None
                point = EvalRequest(req.what, x=x, z=z, w=req.w, coeffs=req.coeffs,
                                    eta=req.eta, sigma=req.sigma, zeta=req.zeta)
                try:
                    value = self._evaluate(point)
                except DomainError as e:
                    logger.debug(f"格点越界: {e}")
                    value = complex(float("nan"), float("nan"))
                rows.append([
                    fmt_number(float(complex(x).real)) if uses_x and x is not None else "",
                    fmt_number(z.real) if uses_z else "",
                    fmt_number(z.imag) if uses_z else "",
                    fmt_number(value.real),
                    fmt_number(value.imag),
                ])
            return Table(list(GRID_HEADER), rows)
        except Exception as e:
            logger.error(f"eval 网格失败: {e}")
            raise

    def _evaluate(self, req: EvalRequest) -> complex:
        params = self.params
        if req.what not in EVAL_TARGETS:
            raise DomainError(f"未知的求值目标: {req.what}")
        if req.what == "density":
            if req.x is None:
                raise DomainError("density 需要 --x")
            return density(orthogonality_measure(params, req.zeta), req.x)
        z = complex(req.z if req.z is not None else 0)
        if req.what == "coherent":
            if req.x is None:
                raise DomainError("coherent 需要 --x")
            return coherent_E(params, req.x, z, tol=self.quad.rel_tol).value
        if req.what == "kernel":
            eta = params.eta_f if req.eta is None else req.eta
            sigma = params.sigma_f if req.sigma is None else req.sigma
            w = complex(req.w if req.w is not None else 0)
            return fock_kernel(eta, sigma, z, w, tol=self.quad.rel_tol).value
        if req.what == "transform-T":
            f = ExactPoly(Basis.FALLING_BETA, tuple(req.coeffs))
            return transform_T(params, f, z).value
        f = ExactPoly(Basis.SHEFFER, tuple(req.coeffs))
        if req.what == "transform-S":
            return transform_S(params, f, z).value
        return transform_curlyS(params, f, z)
