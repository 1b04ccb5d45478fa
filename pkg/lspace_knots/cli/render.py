"""Plain ASCII and JSON rendering shared by the commands"""
import json
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple


def yes_no(value: bool) -> str:
    return "yes" if value else "no"


def identity_mark(holds: Optional[bool]) -> str:
    return "-" if holds is None else ("ok" if holds else "FAIL")


def dash(value: Optional[Any]) -> str:
    return "-" if value is None else str(value)


def render_ranks(ranks: Dict[int, int]) -> str:
    return " ".join(f"{s}:{rank}" for s, rank in ranks.items())


def render_check(left: int, right: int) -> str:
    return f"{left} {'=' if left == right else '!='} {right}"


def render_pairs(pairs: Sequence[Tuple[str, str]]) -> str:
    """one "key  value" line per pair, keys padded to the longest"""
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key.ljust(width)}  {value}".rstrip() for key, value in pairs)


def _line(cells: Iterable[str], widths: Sequence[int]) -> str:
    return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """columns padded to their widest cell, a dash rule under the header"""
    widths = [max(len(cell) for cell in column) for column in zip(headers, *rows)]
    lines = [_line(headers, widths), _line(["-" * width for width in widths], widths)]
    lines.extend(_line(row, widths) for row in rows)
    return "\n".join(lines)


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2)
