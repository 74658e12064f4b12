"""Deterministic mock backends.

Every mock is a pure function of its seed and inputs, so pipelines built on
them reproduce byte-identically regardless of worker scheduling.
"""

import numpy as np

from medasr._rng import derive_rng, stable_hash
from medasr.audio.clip import AudioClip
from medasr.errors import BackendError

SENTENCE_TEMPLATES = (
    "The patient was prescribed {term}.",
    "The patient was reviewed today, and we started {term} as discussed.",
    "Examination notes indicate {term} with no acute complications.",
    "We also recommended {term} twice daily after meals.",
    "Follow-up is scheduled to monitor the response to {term}.",
    "The discharge summary lists {term} among the active problems.",
)

MOCK_TTS_RATE = 24000


def fill_template(index: int, term: str) -> str:
    return SENTENCE_TEMPLATES[index].format(term=term)


def template_generate(term: str, seed: int) -> str:
    """Fill a clinical template chosen by hash(seed, term); contains the term verbatim."""
    if not term:
        raise ValueError("term must be non-empty")
    index = stable_hash("template", seed, term) % len(SENTENCE_TEMPLATES)
    return fill_template(index, term)


def mock_context(term: str) -> str:
    return f"clinical dictation concerning {term}"


class MockTextGenerator:
    """Template-based stand-in for the two-stage context/sentence generator."""

    def generate(self, term: str, description: str, seed: int) -> tuple[str, str]:
        return mock_context(term), template_generate(term, seed)


_VOICE_BASE_HZ = {"male": 110.0, "female": 220.0}


def mock_tts(text: str, voice: str) -> AudioClip:
    """Deterministic sinusoid "speech" at 24 kHz, keyed by (text, voice).

    A few hash-derived segments, each a small chord of partials; peak
    amplitude stays at or below 0.9.
    """
    if not text:
        raise ValueError("text must be non-empty")
    rng = derive_rng("tts", voice, text)
    base = _VOICE_BASE_HZ.get(voice, 150.0 + rng.randrange(150))
    n_segments = 3 + rng.randrange(3)
    pieces = []
    for _ in range(n_segments):
        dur = 0.4 + 0.8 * rng.random()
        t = np.arange(int(dur * MOCK_TTS_RATE)) / MOCK_TTS_RATE
        seg = np.zeros_like(t)
        for amp in (0.45, 0.25, 0.15):
            freq = base * (1.0 + rng.randrange(6)) + 40.0 * rng.random()
            seg += amp * np.sin(2.0 * np.pi * freq * t + 2.0 * np.pi * rng.random())
        pieces.append(seg)
    samples = np.concatenate(pieces)
    peak = float(np.max(np.abs(samples)))
    if peak > 0.9:
        samples *= 0.9 / peak
    return AudioClip(samples, MOCK_TTS_RATE)


class MockTtsBackend:
    """TTS backend contract over mock_tts; style parameters are accepted
    (and recorded by callers) but do not alter the mock waveform."""

    def tts(self, text: str, voice: str, style) -> AudioClip:
        return mock_tts(text, voice)


class IdentityTranscriber:
    """Returns the reference text; the zero-error pipeline baseline."""

    def transcribe(self, entry, clip=None) -> str:
        return entry.text


class CannedTranscriber:
    """Replays a fixed id -> hypothesis mapping (e.g. saved model output)."""

    def __init__(self, hypotheses: dict[str, str]):
        self.hypotheses = dict(hypotheses)

    def transcribe(self, entry, clip=None) -> str:
        try:
            return self.hypotheses[entry.id]
        except KeyError:
            raise BackendError(f"no canned hypothesis for entry {entry.id}") from None
