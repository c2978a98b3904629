"""
校验报告

精确值序列化为有理数字符串，数值结果用最短往返十进制表示。
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

METRICS = ("exact", "rel", "abs")


def fmt_number(value) -> str:
    """复数写成 "re,im"，实数用 repr（最短往返）"""
    if isinstance(value, complex):
        return f"{value.real!r},{value.imag!r}"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class ReportRow:
    """单条校验结果"""
    test_id: str
    inputs: Dict[str, str]
    expected: str
    actual: str
    metric: str                      # 'exact' | 'rel' | 'abs'
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    tolerance: float = 0.0
    passed: bool = False
    message: Optional[str] = None

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> ReportRow:
        return cls(**{**data, 'inputs': dict(data.get('inputs', {}))})


def _inputs(inputs: Optional[dict]) -> Dict[str, str]:
    return {str(k): fmt_number(v) for k, v in (inputs or {}).items()}


def exact_row(test_id: str, inputs: Optional[dict], expected, actual) -> ReportRow:
    """精确行：两侧相等即通过"""
    return ReportRow(
        test_id=test_id,
        inputs=_inputs(inputs),
        expected=str(expected),
        actual=str(actual),
        metric="exact",
        passed=expected == actual,
    )


def numeric_row(test_id: str, inputs: Optional[dict], expected, actual,
                tolerance: float, metric: str = "rel") -> ReportRow:
    """
    数值行

    rel: |a−e|/|e|（e=0 时退化为 |a−e|）；abs: |a−e|。误差不超过 tolerance 即通过。
    """
    if metric not in ("rel", "abs"):
        raise ValueError(f"未知的误差度量: {metric}")
    abs_err = float(abs(complex(actual) - complex(expected)))
    scale = abs(complex(expected))
    rel_err = abs_err / scale if scale else abs_err
    err = rel_err if metric == "rel" else abs_err
    return ReportRow(
        test_id=test_id,
        inputs=_inputs(inputs),
        expected=fmt_number(expected),
        actual=fmt_number(actual),
        metric=metric,
        abs_err=abs_err,
        rel_err=rel_err,
        tolerance=tolerance,
        passed=math.isfinite(err) and err <= tolerance,
    )


def error_row(test_id: str, inputs: Optional[dict], exc: Exception, metric: str = "exact") -> ReportRow:
    """检查本身抛出库错误时的失败行"""
    return ReportRow(
        test_id=test_id,
        inputs=_inputs(inputs),
        expected="",
        actual="",
        metric=metric,
        passed=False,
        message=f"{type(exc).__name__}: {exc}",
    )


@dataclass
class SuiteReport:
    """一次套件运行的结果，行按 test_id 排序"""
    suite: str
    seed: int
    rows: List[ReportRow] = field(default_factory=list)
    started_at: str = ""
    duration_s: float = 0.0

    def __post_init__(self):
        self.rows = sorted(self.rows, key=lambda r: r.test_id)

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def status(self) -> str:
        return "passed" if self.failed == 0 else "failed"

    @property
    def failing_rows(self) -> List[ReportRow]:
        return [r for r in self.rows if not r.passed]

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'seed': self.seed,
            'started_at': self.started_at,
            'duration_s': self.duration_s,
            'total': self.total,
            'passed': self.passed,
            'failed': self.failed,
            'status': self.status,
            'rows': [r.to_dict() for r in self.rows],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> SuiteReport:
        data = json.loads(text)
        return cls(
            suite=data['suite'],
            seed=data['seed'],
            rows=[ReportRow.from_dict(r) for r in data.get('rows', [])],
            started_at=data.get('started_at', ""),
            duration_s=data.get('duration_s', 0.0),
        )

    def to_text(self) -> str:
        """人类可读摘要：失败行逐条列出"""
        lines = [
            f"suite={self.suite} seed={self.seed} total={self.total} "
            f"passed={self.passed} failed={self.failed} status={self.status}"
        ]
        for row in self.failing_rows:
            detail = row.message or (
                f"expected={row.expected} actual={row.actual} "
                f"{row.metric}_err={row.rel_err if row.metric == 'rel' else row.abs_err}"
            )
            lines.append(f"FAIL {row.test_id}: {detail}")
        return "\n".join(lines)
