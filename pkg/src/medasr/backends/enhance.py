"""Lexicon-constrained spelling correction for ASR hypotheses.

Built-in stand-in for a trained semantic-enhancer model behind the same
text-in/text-out contract: every out-of-lexicon token is replaced by the
nearest lexicon term within a small edit distance, ties broken by smaller
distance then lexicographic order.  In-lexicon tokens are never touched,
which makes the operation idempotent.
"""

from dataclasses import dataclass
from pathlib import Path

from medasr.metrics.align import levenshtein
from medasr.metrics.normalize import normalize


@dataclass(frozen=True)
class Lexicon:
    terms: frozenset[str]
    max_edit_distance: int = 2

    def __post_init__(self):
        if not self.terms:
            raise ValueError("lexicon must contain at least one term")
        for term in self.terms:
            if not term or term != term.lower() or term.split() != [term]:
                raise ValueError(f"lexicon term {term!r} is not a normalized word")
        if self.max_edit_distance < 0:
            raise ValueError("max_edit_distance must be non-negative")

    @classmethod
    def from_terms(cls, terms, max_edit_distance: int = 2) -> "Lexicon":
        collected = set()
        for term in terms:
            collected.update(normalize(term).tokens)
        return cls(frozenset(collected), max_edit_distance)

    @classmethod
    def from_file(cls, path, max_edit_distance: int = 2) -> "Lexicon":
        """One term per line; blank lines and # comments ignored."""
        terms = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                terms.append(line)
        return cls.from_terms(terms, max_edit_distance)


def _correct_token(token: str, sorted_terms: list[str], max_distance: int) -> str:
    best_term = None
    best_distance = max_distance + 1
    chars = list(token)
    for term in sorted_terms:
        if abs(len(term) - len(token)) >= best_distance:
            continue
        distance = levenshtein(chars, list(term))
        if distance < best_distance:
            best_distance = distance
            best_term = term
    return best_term if best_term is not None else token


def lexicon_enhance(hypothesis: str, lexicon: Lexicon) -> str:
    """Correct each out-of-lexicon token of the normalized hypothesis."""
    sorted_terms = sorted(lexicon.terms)
    out = []
    for token in normalize(hypothesis).tokens:
        if token in lexicon.terms:
            out.append(token)
        else:
            out.append(_correct_token(token, sorted_terms, lexicon.max_edit_distance))
    return " ".join(out)


class LexiconEnhancer:
    """Enhancer-protocol wrapper with the term list pre-sorted."""

    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon
        self._sorted_terms = sorted(lexicon.terms)

    def enhance(self, text: str) -> str:
        out = []
        for token in normalize(text).tokens:
            if token in self.lexicon.terms:
                out.append(token)
            else:
                out.append(_correct_token(token, self._sorted_terms,
                                          self.lexicon.max_edit_distance))
        return " ".join(out)
