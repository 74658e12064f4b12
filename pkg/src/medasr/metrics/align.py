"""Edit alignment over token or character sequences.

The distance itself is the classic unit-cost Levenshtein DP; what this module
pins down is the *decomposition* into substitutions, deletions, and
insertions.  Multiple minimal alignments usually exist, so the backtrace rule
(diagonal, then deletion, then insertion, walking back from the bottom-right
cell) is fixed to make reports reproducible.

Two interchangeable kernels implement it: a Cython extension and a pure
Python fallback.  The compiled one is selected at import when built; set
``MEDASR_ALIGN_BACKEND=python`` (or ``c``) to force a choice, and see
``benchmarks/bench_align.py`` for the speed comparison.
"""

import os
from array import array
from dataclasses import dataclass

from medasr.metrics import _align_py

try:
    from medasr.metrics import _align_c
except ImportError:
    _align_c = None

_KERNELS = {"python": _align_py.align_counts_ids}
if _align_c is not None:
    _KERNELS["c"] = _align_c.align_counts_ids

_env = os.environ.get("MEDASR_ALIGN_BACKEND", "").strip().lower()
if _env in _KERNELS:
    _DEFAULT = _env
else:
    _DEFAULT = "c" if "c" in _KERNELS else "python"


def available_kernels() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def default_kernel() -> str:
    return _DEFAULT


@dataclass(frozen=True)
class AlignmentCounts:
    """Substitution/deletion/insertion decomposition of a minimal alignment."""

    substitutions: int
    deletions: int
    insertions: int
    reference_length: int

    def __post_init__(self):
        if min(self.substitutions, self.deletions, self.insertions,
               self.reference_length) < 0:
            raise ValueError("alignment counts must be non-negative")

    @property
    def distance(self) -> int:
        return self.substitutions + self.deletions + self.insertions


def _as_ids(reference, hypothesis):
    """Intern both sequences into small integer ids sharing one table."""
    table = {}
    ref = []
    for item in reference:
        ref.append(table.setdefault(item, len(table)))
    hyp = []
    for item in hypothesis:
        hyp.append(table.setdefault(item, len(table)))
    return ref, hyp


def align_counts(reference, hypothesis, kernel: str | None = None) -> AlignmentCounts:
    """Align two sequences of hashable items under unit edit costs.

    ``reference``/``hypothesis`` may be any sequences (tokens, characters).
    Raw strings are rejected to avoid silently aligning characters when
    tokens were intended; pass ``list(text)`` explicitly for characters.
    """
    if isinstance(reference, str) or isinstance(hypothesis, str):
        raise TypeError("pass token/character sequences, not raw strings")
    name = kernel or _DEFAULT
    try:
        fn = _KERNELS[name]
    except KeyError:
        raise ValueError(f"unknown alignment kernel {name!r}; "
                         f"available: {available_kernels()}") from None
    ref_ids, hyp_ids = _as_ids(reference, hypothesis)
    if name == "c":
        subs, dels, ins = fn(array("i", ref_ids), array("i", hyp_ids))
    else:
        subs, dels, ins = fn(ref_ids, hyp_ids)
    return AlignmentCounts(subs, dels, ins, len(ref_ids))


def levenshtein(a, b, kernel: str | None = None) -> int:
    """Unit-cost edit distance between two sequences."""
    return align_counts(a, b, kernel=kernel).distance
