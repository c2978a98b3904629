"""
校验 API
运行校验套件、落盘报告并查询历史
"""
from pathlib import Path
from typing import List, Optional, Tuple, Union

from core.database import VerifyDatabase, VerifyRun, VerifyRunDetail
from core.measures import QuadConfig
from core.utils.logger import logger
from core.verify import SuiteReport, VerifyRecorder, run_suite


class VerifyAPI:
    """校验套件与历史记录"""

    def __init__(self, db_path: Union[str, Path] = "verify_history.db"):
        self.db_path = db_path
        self._db: Optional[VerifyDatabase] = None
        logger.info("VerifyAPI 初始化完成")

    @property
    def db(self) -> VerifyDatabase:
        # 只在需要记录或查询时才创建数据库文件
        if self._db is None:
            self._db = VerifyDatabase(self.db_path)
        return self._db

    # ==================== 运行 API ====================

    def run_verify(self, suite: str, seed: int, cfg: QuadConfig = QuadConfig(), workers: int = 4,
                   fault: Optional[str] = None, record: bool = False) -> Tuple[SuiteReport, Optional[int]]:
        """
        运行套件

        Returns:
            (报告, run_id)；未要求记录时 run_id 为 None
        """
        try:
            logger.info(f"verify: suite={suite}, seed={seed}, fault={fault}, record={record}")
            report = run_suite(suite, seed, cfg=cfg, workers=workers, fault=fault)
            run_id = VerifyRecorder(self.db).record(report) if record else None
            return report, run_id
        except Exception as e:
            logger.error(f"verify 失败: {e}")
            raise

    def write_report(self, report: SuiteReport, path: Union[str, Path]) -> Path:
        """把 JSON 报告写到文件"""
        try:
            path = Path(path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(report.to_json(), encoding="utf-8")
            logger.info(f"报告已写入: {path}")
            return path
        except Exception as e:
            logger.error(f"写报告失败: {e}")
            raise

    # ==================== 历史 API ====================

    def get_history(self, suite: Optional[str] = None, limit: int = 50) -> List[VerifyRun]:
        """最近的运行记录，新的在前"""
        try:
            return self.db.get_runs(suite=suite, limit=limit)
        except Exception as e:
            logger.error(f"获取校验历史失败: {e}")
            raise

    def get_run_detail(self, run_id: int) -> Optional[VerifyRunDetail]:
        try:
            return self.db.get_run_detail(run_id)
        except Exception as e:
            logger.error(f"获取运行详情失败: {e}")
            raise

    def delete_run(self, run_id: int) -> bool:
        try:
            return self.db.delete_run(run_id) > 0
        except Exception as e:
            logger.error(f"删除运行记录失败: {e}")
            raise
