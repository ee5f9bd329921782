"""Streamed JSON Lines I/O with deterministic output."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DataError
from .preprocess import Document

__all__ = ["read_jsonl", "write_jsonl", "read_documents", "write_documents"]


def read_jsonl(path: str | Path) -> Iterator[dict]:
    """Yield one parsed object per non-blank line."""
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid JSON: {exc}") from exc


def write_jsonl(path: str | Path, rows: Iterable[dict]) -> int:
    """Write rows line by line with sorted keys; returns the row count."""
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False, sort_keys=True))
            handle.write("\n")
            count += 1
    return count


def read_documents(path: str | Path) -> Iterator[Document]:
    for row in read_jsonl(path):
        yield Document.from_dict(row)


def write_documents(path: str | Path, docs: Iterable[Document]) -> int:
    return write_jsonl(path, (doc.to_dict() for doc in docs))
