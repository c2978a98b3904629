"""
数据库模块
管理校验历史记录
"""
from .db_manager import VerifyDatabase
from .models import VerifyRun, VerifyRowRecord, VerifyRunDetail

__all__ = ['VerifyDatabase', 'VerifyRun', 'VerifyRowRecord', 'VerifyRunDetail']
