"""Synthetic sentence generation from ingested source records.

Each record becomes exactly one sentence via a pluggable text-generation
backend (two-stage: context, then sentence).  Sentence ids are name-based
UUIDs derived from the run seed and record identity, so a rerun with the
same seed reproduces the corpus byte for byte.
"""

import json
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from medasr._rng import stable_hash
from medasr.errors import BackendError, EmptySource, SchemaError

_NAMESPACE = uuid.UUID("6ba7b811-9dad-11d1-80b4-00c04fd430c8")


@dataclass(frozen=True)
class SyntheticSentence:
    id: str
    text: str
    source: str
    term: str


def sentence_id(seed: int, index: int, record) -> str:
    name = f"medasr:text:{seed}:{index}:{record.source}:{record.code}:{record.term}"
    return str(uuid.uuid5(_NAMESPACE, name))


def generate_text(records, backend, seed: int = 42,
                  jobs: int = 1) -> list[SyntheticSentence]:
    """One sentence per record, in input order, all-or-nothing per batch."""
    records = list(records)
    if not records:
        raise EmptySource("no records to generate sentences from")

    def one(indexed):
        index, record = indexed
        sid = sentence_id(seed, index, record)
        item_seed = stable_hash("textgen", seed, sid)
        try:
            _context, sentence = backend.generate(record.term,
                                                  record.description, item_seed)
        except BackendError as exc:
            raise BackendError(f"text generation failed at record {index} "
                               f"(term {record.term!r}): {exc}",
                               status=exc.status) from exc
        return SyntheticSentence(sid, sentence, record.source, record.term)

    indexed = list(enumerate(records))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, indexed))
    return [one(item) for item in indexed]


def write_sentences(sentences, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for s in sentences:
            fh.write(json.dumps(
                {"id": s.id, "text": s.text, "source": s.source, "term": s.term},
                ensure_ascii=False, separators=(",", ":")) + "\n")


def read_sentences(path) -> list[SyntheticSentence]:
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                sentences.append(SyntheticSentence(
                    obj["id"], obj["text"], obj.get("source", ""),
                    obj.get("term", "")))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise SchemaError(f"{path}:{lineno}: bad sentence record: {exc}") from exc
    return sentences
