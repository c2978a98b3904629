"""
校验历史数据库
使用 SQLite 存储套件运行与逐行结果
"""
import json
import sqlite3
from contextlib import closing, contextmanager
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Union

from .models import VerifyRun, VerifyRowRecord, VerifyRunDetail
from core.utils.logger import logger


class VerifyDatabase:
    """校验历史数据库管理"""

    def __init__(self, db_path: Union[str, Path] = "verify_history.db"):
        """
        初始化数据库

        Args:
            db_path: 数据库文件路径；相对路径按项目根目录解析
        """
        path = Path(db_path)
        if not path.is_absolute():
            project_root = Path(__file__).parent.parent.parent
            path = project_root / path
        self.db_path = path
        self._init_database()
        logger.info(f"校验数据库初始化: {self.db_path}")

    @contextmanager
    def _connect(self) -> Iterator[sqlite3.Connection]:
        """事务内的连接：正常退出提交，异常回滚，最后关闭"""
        with closing(sqlite3.connect(self.db_path)) as conn:
            conn.execute("PRAGMA foreign_keys = ON")
            with conn:
                yield conn

    def _init_database(self):
        """初始化数据库表"""
        with self._connect() as conn:
            cursor = conn.cursor()

            # 套件运行记录表
            cursor.execute("""
                CREATE TABLE IF NOT EXISTS verify_runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    suite TEXT NOT NULL,
                    seed INTEGER NOT NULL,
                    status TEXT NOT NULL,
                    total INTEGER DEFAULT 0,
                    passed INTEGER DEFAULT 0,
                    failed INTEGER DEFAULT 0,
                    started_at TEXT,
                    duration_s REAL DEFAULT 0,
                    created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
                )
            """)

            # 逐行结果表
            cursor.execute("""
                CREATE TABLE IF NOT EXISTS verify_rows (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    run_id INTEGER NOT NULL,
                    test_id TEXT NOT NULL,
                    inputs TEXT NOT NULL,
                    expected TEXT,
                    actual TEXT,
                    metric TEXT NOT NULL,
                    abs_err REAL,
                    rel_err REAL,
                    tolerance REAL,
                    passed INTEGER NOT NULL,
                    message TEXT,
                    FOREIGN KEY (run_id) REFERENCES verify_runs(id) ON DELETE CASCADE
                )
            """)

            cursor.execute("""
                CREATE INDEX IF NOT EXISTS idx_verify_rows_run
                ON verify_rows(run_id)
            """)
            cursor.execute("""
                CREATE INDEX IF NOT EXISTS idx_verify_runs_created
                ON verify_runs(created_at DESC)
            """)

            conn.commit()

    def save_run(self, run: VerifyRun, rows: Iterable) -> int:
        """
        保存一次运行及其全部行

        Args:
            run: 运行记录
            rows: ReportRow 序列

        Returns:
            run_id: 记录 ID
        """
        with self._connect() as conn:
            cursor = conn.cursor()
            cursor.execute("""
                INSERT INTO verify_runs (
                    suite, seed, status, total, passed, failed, started_at, duration_s
                ) VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """, (
                run.suite, run.seed, run.status, run.total, run.passed, run.failed,
                run.started_at, run.duration_s
            ))
            run_id = cursor.lastrowid
            count = 0
            for row in rows:
                cursor.execute("""
                    INSERT INTO verify_rows (
                        run_id, test_id, inputs, expected, actual, metric,
                        abs_err, rel_err, tolerance, passed, message
                    ) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
                """, (
                    run_id, row.test_id, json.dumps(row.inputs, ensure_ascii=False), row.expected,
                    row.actual, row.metric, row.abs_err, row.rel_err, row.tolerance,
                    int(row.passed), row.message
                ))
                count += 1
            conn.commit()
            logger.info(f"保存校验记录: {run.suite} (ID: {run_id}, {count} 行)")
            return run_id

    def get_runs(self, suite: Optional[str] = None, limit: int = 50) -> List[VerifyRun]:
        """
        获取运行历史，按时间倒序

        Args:
            suite: 只看某个套件；None 表示全部
            limit: 返回记录数量
        """
        logger.info(f"查询校验历史: suite={suite}, limit={limit}")
        with self._connect() as conn:
            conn.row_factory = sqlite3.Row
            cursor = conn.cursor()
            if suite is None:
                cursor.execute("""
                    SELECT * FROM verify_runs
                    ORDER BY created_at DESC, id DESC
                    LIMIT ?
                """, (limit,))
            else:
                cursor.execute("""
                    SELECT * FROM verify_runs
                    WHERE suite = ?
                    ORDER BY created_at DESC, id DESC
                    LIMIT ?
                """, (suite, limit))
            rows = cursor.fetchall()
            logger.info(f"查询到 {len(rows)} 条记录")
            return [VerifyRun(**dict(row)) for row in rows]

    def get_run_detail(self, run_id: int) -> Optional[VerifyRunDetail]:
        """获取运行详情（含逐行结果）；不存在时返回 None"""
        with self._connect() as conn:
            conn.row_factory = sqlite3.Row
            cursor = conn.cursor()

            cursor.execute("SELECT * FROM verify_runs WHERE id = ?", (run_id,))
            run_row = cursor.fetchone()
            if not run_row:
                return None
            run = VerifyRun(**dict(run_row))

            cursor.execute("""
                SELECT * FROM verify_rows WHERE run_id = ?
                ORDER BY test_id
            """, (run_id,))
            records = []
            for row in cursor.fetchall():
                data = dict(row)
                data['inputs'] = json.loads(data['inputs'])
                data['passed'] = bool(data['passed'])
                records.append(VerifyRowRecord(**data))
            return VerifyRunDetail(run=run, rows=records)

    def delete_run(self, run_id: int) -> int:
        """删除一次运行（逐行结果级联删除），返回删除的记录数"""
        with self._connect() as conn:
            cursor = conn.cursor()
            cursor.execute("DELETE FROM verify_runs WHERE id = ?", (run_id,))
            deleted = cursor.rowcount
            conn.commit()
            logger.info(f"删除了 {deleted} 条校验记录")
            return deleted
