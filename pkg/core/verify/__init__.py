"""
校验套件
登记表、报告与并发运行器
"""
from .report import ReportRow, SuiteReport, exact_row, numeric_row, error_row, fmt_number
from .registry import REGISTRY, SUITES, Check, CheckContext, check, checks_for, derive_seed
from .runner import FAULTS, run_suite
from .recorder import VerifyRecorder

__all__ = [
    'ReportRow', 'SuiteReport', 'exact_row', 'numeric_row', 'error_row', 'fmt_number',
    'REGISTRY', 'SUITES', 'Check', 'CheckContext', 'check', 'checks_for', 'derive_seed',
    'FAULTS', 'run_suite', 'VerifyRecorder',
]
