"""
数据模型
"""
from dataclasses import dataclass, asdict
from typing import Dict, List, Optional


@dataclass
class VerifyRun:
    """校验运行记录"""
    id: Optional[int] = None
    suite: str = ""
    seed: int = 0
    status: str = ""  # 'passed' | 'failed'
    total: int = 0
    passed: int = 0
    failed: int = 0
    started_at: str = ""
    duration_s: float = 0.0
    created_at: Optional[str] = None

    def to_dict(self):
        return asdict(self)


@dataclass
class VerifyRowRecord:
    """单条校验结果"""
    id: Optional[int] = None
    run_id: int = 0
    test_id: str = ""
    inputs: Optional[Dict[str, str]] = None
    expected: str = ""
    actual: str = ""
    metric: str = ""
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    tolerance: float = 0.0
    passed: bool = False
    message: Optional[str] = None

    def to_dict(self):
        return asdict(self)


@dataclass
class VerifyRunDetail:
    """校验运行详情（含全部行）"""
    run: VerifyRun
    rows: List[VerifyRowRecord]

    def to_dict(self):
        return {
            **self.run.to_dict(),
            'rows': [r.to_dict() for r in self.rows],
        }
