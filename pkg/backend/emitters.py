"""
输出格式

CSV：逗号分隔、带表头、UTF-8、LF 换行。JSON：对象数组。text：制表符分隔，供终端阅读。
"""
import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence, TextIO

FORMATS = ("csv", "json", "text")


def render_table(header: Sequence[str], rows: Iterable[Sequence[Any]], fmt: str) -> str:
    """把表格渲染为字符串；单元格先转为 str"""
    rows = [[_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
    if fmt == "json":
        records: List[Dict[str, str]] = [dict(zip(header, row)) for row in rows]
        return json.dumps(records, ensure_ascii=False, indent=2) + "\n"
    if fmt == "text":
        lines = ["\t".join(header)] + ["\t".join(row) for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"未知的输出格式: {fmt}")


def emit_table(header: Sequence[str], rows: Iterable[Sequence[Any]], fmt: str, stream: TextIO):
    stream.write(render_table(header, rows, fmt))


def emit_json(data: Any, stream: TextIO):
    stream.write(json.dumps(data, ensure_ascii=False, indent=2) + "\n")


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)
