"""Line-delimited JSON input/output shared by the pipeline stages."""
from __future__ import annotations

import json
from dataclasses import asdict
from importlib import resources
from typing import Any, Iterable, Iterator

from .corpus import CompanyRecord, SloganPair


def read_jsonl(path: str) -> Iterator[dict[str, Any]]:
    """Yield one object per non-blank line; error messages carry the
    offending line number."""
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError("%s:%d: invalid JSON: %s" % (path, lineno, exc))
            if not isinstance(row, dict):
                raise ValueError("%s:%d: expected an object" % (path, lineno))
            yield row


def write_jsonl(path: str, rows: Iterable[dict[str, Any]]) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")
            count += 1
    return count


def write_dataclass_jsonl(path: str, items: Iterable[Any]) -> int:
    return write_jsonl(path, (asdict(item) for item in items))


def _require(row: dict, keys: tuple[str, ...], path: str, lineno_hint: str) -> None:
    missing = [k for k in keys if k not in row]
    if missing:
        raise ValueError(
            "%s: %s missing required keys %s" % (path, lineno_hint, missing)
        )


def load_company_records(path: str) -> list[CompanyRecord]:
    records = []
    for i, row in enumerate(read_jsonl(path)):
        _require(
            row,
            ("company_name", "raw_title", "raw_description"),
            path,
            "record %d" % i,
        )
        records.append(
            CompanyRecord(
                company_name=str(row["company_name"]),
                url=str(row.get("url", "")),
                raw_title=str(row["raw_title"]),
                raw_description=str(row["raw_description"]),
                industry=str(row.get("industry", "")),
            )
        )
    return records


def load_pairs(path: str) -> list[SloganPair]:
    pairs = []
    for i, row in enumerate(read_jsonl(path)):
        _require(
            row,
            ("id", "company_name", "description", "slogan"),
            path,
            "pair %d" % i,
        )
        pairs.append(
            SloganPair(
                id=str(row["id"]),
                company_name=str(row["company_name"]),
                description=str(row["description"]),
                slogan=str(row["slogan"]),
                split=str(row.get("split", "train")),
                industry=str(row.get("industry", "")),
            )
        )
    return pairs
