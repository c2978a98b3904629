"""
命令行入口

    python app.py [--params FILE] [--format csv|json|text] [--log-level LEVEL] <命令> ...

退出码：0 成功（verify 全部通过）；1 verify 有失败行或数值不收敛；2 用法、解析、定义域或参数文件错误。
结果只写 stdout，日志与错误信息写 stderr。
"""
import argparse
import sys
from typing import List, Optional, TextIO

from backend import config
from backend.api import API, BASES, EVAL_TARGETS, POLY_SOURCES, EvalRequest, Table, parse_coeffs, parse_grid
from backend.emitters import FORMATS, emit_json, emit_table
from backend.paramfile import ParamFile
from backend.verify_api import VerifyAPI
from core.errors import ConvergenceError, DomainError, ParamFileError, ParseError, SBError
from core.utils.logger import logger, setup_logger
from core.verify import FAULTS, SUITES

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _complex_arg(text: str) -> complex:
    """Python 复数字面量，如 1、-0.5、1+0.5j"""
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"不是合法的复数: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sb",
        description="Meixner 类正交 Sheffer 序列、广义 Weyl 代数与 Segal–Bargmann 变换工具",
    )
    parser.add_argument("--params", help="参数文件（JSON）；缺省读 SB_PARAMS_FILE，再缺省用内置 Laguerre(1,1,1)")
    parser.add_argument("--format", choices=FORMATS, help="输出格式；表格默认 csv，正规序与校验默认 text")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="日志级别，覆盖 SB_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="多项式系数表（按指标降序）")
    p.add_argument("-n", type=int, required=True, help="次数，0 ≤ n ≤ 64")
    p.add_argument("--basis", choices=list(BASES), default="monomial")
    p.add_argument("--of", choices=POLY_SOURCES, help="s: s_n，p: 平移序列 p_n，x: xⁿ")

    p = sub.add_parser("normal-order", help="在 [V,U] = aV + b 下化为正规序",
                       description="语法: expr := ['-'] term (('+'|'-') term)*；term := factor ('*' factor)*；"
                                   "factor := atom ('^' 自然数)?；atom := U | V | 复有理字面量 | '(' expr ')'")
    p.add_argument("expr")
    p.add_argument("--a", default="1", help="复有理字面量，如 1、-1/2、1+i")
    p.add_argument("--b", default="0", help="复有理字面量")

    p = sub.add_parser("moments", help="精确矩与求积矩对照")
    p.add_argument("--n-max", type=int, default=6, help="最高阶，≤ 12")

    p = sub.add_parser("verify", help="运行校验套件")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=config.WORKERS)
    p.add_argument("--report-json", help="把 JSON 报告写到该文件")
    p.add_argument("--record", action="store_true", help="写入历史数据库")
    p.add_argument("--inject-fault", choices=FAULTS, help="故障注入（用于检验校验套件本身）")

    p = sub.add_parser("eval", help="单点或网格求值")
    p.add_argument("--what", choices=EVAL_TARGETS, required=True)
    p.add_argument("--x", type=_complex_arg)
    p.add_argument("--z", type=_complex_arg)
    p.add_argument("--w", type=_complex_arg)
    p.add_argument("--coeffs", default="1", help="系数 c0,c1,...（变换用；transform-T 为下降 β 阶乘基）")
    p.add_argument("--eta", type=float, help="kernel 的 η，缺省取参数的 αβ")
    p.add_argument("--sigma", type=float, help="kernel 的 σ，缺省取参数的 σ")
    p.add_argument("--zeta", type=_complex_arg, help="density 的测度参数 ζ，缺省为 σ")
    p.add_argument("--grid-x", help="a:b:n")
    p.add_argument("--grid-z-re", help="a:b:n")
    p.add_argument("--grid-z-im", help="a:b:n")

    p = sub.add_parser("history", help="校验历史")
    p.add_argument("--suite", choices=SUITES + ("all",))
    p.add_argument("--limit", type=int, default=20)
    return parser


def _load_params(path: Optional[str]) -> ParamFile:
    quad = config.default_quad_config()
    path = path or config.PARAMS_FILE
    if path:
        return ParamFile.load(path, quad_defaults=quad)
    return ParamFile.builtin(quad_defaults=quad)


def _emit(table: Table, fmt: Optional[str], out: TextIO):
    emit_table(table.header, table.rows, fmt or "csv", out)


# ==================== 子命令 ====================

def cmd_poly(args, pf: ParamFile, out: TextIO) -> int:
    _emit(API(pf.params, pf.quad).poly(args.n, args.basis, args.of), args.format, out)
    return EXIT_OK


def cmd_normal_order(args, pf: ParamFile, out: TextIO) -> int:
    nf = API(pf.params, pf.quad).normal_order(args.expr, args.a, args.b)
    fmt = args.format or "text"
    if fmt == "text":
        lines = nf.to_lines() or ["0"]
        out.write("\n".join(lines) + "\n")
    elif fmt == "json":
        emit_json(nf.to_dict(), out)
    else:
        rows = [[str(j), str(k), str(c)] for (j, k), c in nf.items()]
        emit_table(["j", "k", "coefficient"], rows, "csv", out)
    return EXIT_OK


def cmd_moments(args, pf: ParamFile, out: TextIO) -> int:
    _emit(API(pf.params, pf.quad).moments(args.n_max), args.format, out)
    return EXIT_OK


def cmd_verify(args, pf: ParamFile, out: TextIO) -> int:
    api = VerifyAPI(config.HISTORY_DB)
    report, run_id = api.run_verify(args.suite, args.seed, cfg=pf.quad, workers=args.workers,
                                    fault=args.inject_fault, record=args.record)
    if args.report_json:
        api.write_report(report, args.report_json)
    fmt = args.format or "text"
    if fmt == "json":
        out.write(report.to_json() + "\n")
    elif fmt == "csv":
        rows = [[r.test_id, r.metric, r.expected, r.actual,
                 "" if r.abs_err is None else repr(r.abs_err),
                 "" if r.rel_err is None else repr(r.rel_err),
                 repr(r.tolerance), "pass" if r.passed else "FAIL"] for r in report.rows]
        emit_table(["test_id", "metric", "expected", "actual", "abs_err", "rel_err", "tolerance", "status"],
                   rows, "csv", out)
    else:
        out.write(report.to_text() + "\n")
    if run_id is not None:
        logger.info(f"已记录 run_id={run_id}")
    return EXIT_OK if report.status == "passed" else EXIT_FAIL


def cmd_eval(args, pf: ParamFile, out: TextIO) -> int:
    api = API(pf.params, pf.quad)
    req = EvalRequest(args.what, x=args.x, z=args.z, w=args.w, coeffs=tuple(parse_coeffs(args.coeffs)),
                      eta=args.eta, sigma=args.sigma, zeta=args.zeta)
    grids = (args.grid_x, args.grid_z_re, args.grid_z_im)
    if any(grids):
        xs, res, ims = (parse_grid(g) if g else None for g in grids)
        _emit(api.evaluate_grid(req, xs, res, ims), args.format, out)
    else:
        value = api.evaluate(req)
        _emit(Table(["value_re", "value_im"], [[repr(value.real), repr(value.imag)]]), args.format, out)
    return EXIT_OK


def cmd_history(args, pf: ParamFile, out: TextIO) -> int:
    runs = VerifyAPI(config.HISTORY_DB).get_history(args.suite, args.limit)
    header = ["id", "suite", "seed", "status", "total", "passed", "failed", "started_at", "duration_s"]
    rows = [[str(r.to_dict()[h]) for h in header] for r in runs]
    _emit(Table(header, rows), args.format, out)
    return EXIT_OK


COMMANDS = {
    "poly": cmd_poly,
    "normal-order": cmd_normal_order,
    "moments": cmd_moments,
    "verify": cmd_verify,
    "eval": cmd_eval,
    "history": cmd_history,
}


def main(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    setup_logger("sb", args.log_level or config.LOG_LEVEL)

    try:
        pf = _load_params(args.params)
        return COMMANDS[args.command](args, pf, out)
    except ParseError as e:
        err.write(f"解析错误（偏移 {e.offset}）: {e}\n")
        return EXIT_USAGE
    except (ParamFileError, DomainError) as e:
        err.write(f"错误: {e}\n")
        return EXIT_USAGE
    except ConvergenceError as e:
        err.write(f"未收敛: {e}（最佳估计 {e.best_estimate}，误差估计 {e.error_estimate}）\n")
        return EXIT_FAIL
    except SBError as e:
        err.write(f"错误: {e}\n")
        return EXIT_FAIL
