"""
校验记录器
把 SuiteReport 存入历史数据库
"""
from core.database import VerifyDatabase, VerifyRun
from core.utils.logger import logger
from core.verify.report import SuiteReport


class VerifyRecorder:
    """校验记录器"""

    def __init__(self, db: VerifyDatabase):
        self.db = db

    def record(self, report: SuiteReport) -> int:
        """
        记录一次套件运行

        Returns:
            run_id: 记录 ID
        """
        logger.info(f"记录校验运行: suite={report.suite}, seed={report.seed}")
        run = VerifyRun(
            suite=report.suite,
            seed=report.seed,
            status=report.status,
            total=report.total,
            passed=report.passed,
            failed=report.failed,
            started_at=report.started_at,
            duration_s=report.duration_s,
        )
        run_id = self.db.save_run(run, report.rows)
        logger.info(f"校验记录完成: run_id={run_id}")
        return run_id
