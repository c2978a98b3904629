"""
套件运行器

检查在线程池上并发执行；每个检查的随机源只由 (seed, 名称) 决定，报告按 test_id 排序。
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from datetime import datetime
from typing import List, Optional

from core.combinat import stirling_fault
from core.errors import SBError
from core.measures import QuadConfig
from core.utils.logger import logger
from core.verify.registry import Check, checks_for
from core.verify.report import ReportRow, SuiteReport, error_row

# 导入即登记
from core.verify import exact_checks, numeric_checks, slow_checks  # noqa: F401

FAULTS = ("stirling",)


def _run_check(chk: Check, seed: int, cfg: QuadConfig) -> List[ReportRow]:
    started = time.perf_counter()
    try:
        rows = chk.func(chk.context(seed, cfg))
    except SBError as exc:
        logger.error(f"检查 {chk.name} 失败: {exc}")
        return [error_row(f"{chk.suite}.{chk.name}", {}, exc)]
    logger.debug(f"检查 {chk.name}: {len(rows)} 行，{time.perf_counter() - started:.2f}s")
    return rows


def run_suite(suite: str, seed: int, cfg: QuadConfig = QuadConfig(), workers: int = 4,
              fault: Optional[str] = None) -> SuiteReport:
    """
    运行套件

    Args:
        suite: exact | numeric | slow | all
        seed: 根种子，写入报告
        cfg: 求积配置
        workers: 线程数
        fault: 可选的故障注入（"stirling"）

    Raises:
        ValueError: 未知的套件或故障名
    """
    checks = checks_for(suite)
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"未知的故障注入: {fault}")
    logger.info(f"运行套件 {suite}: {len(checks)} 个检查，seed={seed}，workers={workers}")

    started_at = datetime.now().isoformat(timespec="seconds")
    started = time.perf_counter()
    with stirling_fault() if fault == "stirling" else nullcontext():
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            results = list(pool.map(lambda c: _run_check(c, seed, cfg), checks))

    rows = [row for chunk in results for row in chunk]
    report = SuiteReport(suite=suite, seed=seed, rows=rows, started_at=started_at,
                         duration_s=round(time.perf_counter() - started, 3))
    logger.info(f"套件 {suite} 完成: {report.passed}/{report.total} 通过")
    return report
