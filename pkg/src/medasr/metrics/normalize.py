"""Scoring-side text normalization: lowercase, collapse whitespace, tokenize.

Deliberately minimal; no punctuation stripping or diacritic folding, so
scores are a pure function of casing and spacing.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class NormalizedText:
    """An ordered tuple of lowercase, whitespace-free word tokens."""

    tokens: tuple[str, ...]

    @property
    def text(self) -> str:
        """Canonical single-space-joined rendering."""
        return " ".join(self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __bool__(self):
        return bool(self.tokens)


def normalize(raw: str) -> NormalizedText:
    """Lowercase, then split on any whitespace runs (which also trims ends).

    Total: any Unicode string is accepted, the empty string yields zero
    tokens.  Idempotent: normalizing the joined token list reproduces it.
    """
    return NormalizedText(tuple(raw.lower().split()))
