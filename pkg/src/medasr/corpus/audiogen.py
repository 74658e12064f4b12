"""Synthetic speech rendering: sentences x voices -> standardized WAV corpus.

Every (sentence, voice) pair becomes one 30-second clip on disk plus one
manifest entry recording the voice and style parameters used.  Synthesis may
fan out over a thread pool; entries are emitted in (sentence, voice) input
order regardless of scheduling.
"""

import logging
import uuid
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from medasr.audio.clip import standardize_duration
from medasr.audio.wavio import write_wav
from medasr.corpus.manifest import VOICES, ManifestEntry, TtsStyleParams
from medasr.corpus.textgen import _NAMESPACE
from medasr.errors import BackendError

log = logging.getLogger(__name__)

AUDIO_SUBDIR = "audio"
STANDARD_DURATION_S = 30.0


def entry_id(sentence_id: str, voice: str) -> str:
    return str(uuid.uuid5(_NAMESPACE, f"medasr:clip:{sentence_id}:{voice}"))


def synthesize_audio(sentences, backend, style: TtsStyleParams, voices,
                     out_dir, resume: bool = False,
                     jobs: int = 1) -> list[ManifestEntry]:
    """Render clips for every (sentence, voice) pair under ``out_dir``."""
    sentences = list(sentences)
    if not sentences:
        raise ValueError("no sentences to synthesize")
    voices = list(voices)
    if not voices:
        raise ValueError("at least one voice is required")
    for voice in voices:
        if voice not in VOICES:
            raise ValueError(f"unknown voice {voice!r}; expected one of {VOICES}")

    out_dir = Path(out_dir)
    (out_dir / AUDIO_SUBDIR).mkdir(parents=True, exist_ok=True)
    pairs = [(s, v) for s in sentences for v in voices]

    def one(pair):
        sentence, voice = pair
        rel_path = f"{AUDIO_SUBDIR}/{entry_id(sentence.id, voice)}.wav"
        target = out_dir / rel_path
        if not (resume and target.exists()):
            try:
                clip = backend.tts(sentence.text, voice, style)
            except BackendError as exc:
                raise BackendError(f"TTS failed for sentence {sentence.id}: {exc}",
                                   status=exc.status) from exc
            write_wav(target, standardize_duration(clip, STANDARD_DURATION_S))
        return ManifestEntry(
            id=entry_id(sentence.id, voice),
            audio_path=rel_path,
            text=sentence.text,
            duration_s=STANDARD_DURATION_S,
            voice=voice,
            style=style,
            source=sentence.source,
        )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(one, pairs))
    else:
        entries = [one(pair) for pair in pairs]
    log.info("synthesized %d clips (%d sentences x %d voices) under %s",
             len(entries), len(sentences), len(voices), out_dir)
    return entries
