"""Ingestion of exported medical-vocabulary files.

Sources arrive as delimited-text exports (one row per term) rather than live
web pages; a column mapping names which headers hold the code, term, and
description.  Rows are deduplicated on (source, code, term).
"""

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from medasr.errors import EmptySource, SchemaError

log = logging.getLogger(__name__)

SOURCES = ("ICD10", "MIMS", "FDA")


@dataclass(frozen=True)
class SourceRecord:
    source: str
    code: str
    term: str
    description: str


@dataclass(frozen=True)
class IngestResult:
    records: tuple[SourceRecord, ...]
    duplicates: int
    skipped: int


def ingest_sources(files, source: str, columns: dict[str, str],
                   delimiter: str = ",") -> IngestResult:
    """Read delimited exports into unique SourceRecords.

    ``columns`` maps record fields to column headers, e.g.
    ``{"term": "Term", "code": "Code", "description": "Description"}``;
    ``term`` is required, the others optional (empty when unmapped).
    Rows with an empty term are skipped with a logged count.
    """
    if source not in SOURCES:
        raise ValueError(f"source must be one of {SOURCES}, got {source!r}")
    if "term" not in columns:
        raise SchemaError("column mapping must include 'term'")

    records: list[SourceRecord] = []
    seen: set[tuple[str, str, str]] = set()
    duplicates = 0
    skipped = 0
    for path in files:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh, delimiter=delimiter)
            header = reader.fieldnames or []
            for field, column in columns.items():
                if column not in header:
                    raise SchemaError(
                        f"{path}: mapped column {column!r} (for field "
                        f"{field!r}) not in header {header}")
            for row in reader:
                term = (row.get(columns["term"]) or "").strip()
                if not term:
                    skipped += 1
                    continue
                code = (row.get(columns.get("code", "")) or "").strip()
                desc = (row.get(columns.get("description", "")) or "").strip()
                key = (source, code, term)
                if key in seen:
                    duplicates += 1
                    continue
                seen.add(key)
                records.append(SourceRecord(source, code, term, desc))
    if not records:
        raise EmptySource(f"no usable records ingested for source {source}")
    if duplicates or skipped:
        log.info("ingest %s: %d records, %d duplicates dropped, %d empty-term "
                 "rows skipped", source, len(records), duplicates, skipped)
    return IngestResult(tuple(records), duplicates, skipped)


def write_source_records(records, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(
                {"source": r.source, "code": r.code, "term": r.term,
                 "description": r.description},
                ensure_ascii=False, separators=(",", ":")) + "\n")


def read_source_records(path) -> list[SourceRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                records.append(SourceRecord(obj["source"], obj.get("code", ""),
                                            obj["term"], obj.get("description", "")))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise SchemaError(f"{path}:{lineno}: bad source record: {exc}") from exc
    return records
