from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence


def ensure_directories(*directories: Path) -> None:
    for directory in directories:
        directory.mkdir(parents=True, exist_ok=True)


def to_serializable(data: Any) -> Any:
    if hasattr(data, "to_json"):
        return to_serializable(data.to_json())
    if hasattr(data, "__dataclass_fields__"):
        return to_serializable(asdict(data))
    if isinstance(data, Fraction):
        return str(data)
    if isinstance(data, dict):
        return {str(k): to_serializable(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_serializable(v) for v in data]
    if isinstance(data, (set, frozenset)):
        return [to_serializable(v) for v in sorted(data)]
    return data


def dumps_json(data: Any) -> str:
    # sort_keys stays off: payloads carry their own deterministic key order
    return json.dumps(to_serializable(data), indent=2, ensure_ascii=False) + "\n"


def save_json(data: Any, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as f:
        f.write(dumps_json(data))


def load_json(path: Path) -> Any:
    with path.open("r", encoding="utf-8") as f:
        return json.load(f)


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([str(cell) for cell in row])
    return buffer.getvalue()


def write_output(text: str, out: Optional[Path]) -> None:
    """
    Writes CLI output to `out`, or to stdout when no path is given.
    """
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as f:
        f.write(text if text.endswith("\n") else text + "\n")


def text_block(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"
