"""Energy-threshold voice activity detection.

Deterministic stand-in for a learned VAD with the same contract: classify
fixed-length frames as speech or not, merge adjacent speech frames into
segments, and strip the non-speech remainder.

A frame is speech when its energy exceeds the noise-floor estimate plus a
relative margin.  The floor estimate is the quietest frame's energy, capped
at ``silence_floor_db`` so a clip with no quiet frames at all (one long tone)
does not mask itself.
"""

from dataclasses import dataclass

import numpy as np

from medasr.audio.clip import AudioClip

_EPS = 1e-12


@dataclass(frozen=True)
class VadSegments:
    """Half-open (start_frame, end_frame) speech intervals, in frame units."""

    segments: tuple[tuple[int, int], ...]
    frame_ms: float

    def __post_init__(self):
        prev_end = -1
        for start, end in self.segments:
            if not (0 <= start < end):
                raise ValueError(f"bad segment ({start}, {end})")
            if start <= prev_end:
                raise ValueError("segments must be non-overlapping and increasing")
            prev_end = end


def frame_energies_db(clip: AudioClip, frame_ms: float) -> np.ndarray:
    """Per-frame mean-square energy in dB; includes a partial tail frame."""
    flen = int(round(clip.sample_rate * frame_ms / 1000.0))
    if flen <= 0:
        raise ValueError(f"frame_ms {frame_ms} gives an empty frame")
    x = clip.samples
    n_frames = (x.size + flen - 1) // flen
    energies = np.empty(n_frames)
    for i in range(n_frames):
        frame = x[i * flen:(i + 1) * flen]
        energies[i] = 10.0 * np.log10(np.mean(frame * frame) + _EPS)
    return energies


def energy_vad(clip: AudioClip, frame_ms: float = 30.0,
               threshold_db_rel: float = 6.0,
               silence_floor_db: float = -50.0) -> tuple[VadSegments, AudioClip]:
    """Detect speech frames and return (segments, clip stripped to speech).

    All-silence input yields zero segments and an empty stripped clip.
    """
    if not len(clip):
        raise ValueError("cannot run VAD on an empty clip")
    flen = int(round(clip.sample_rate * frame_ms / 1000.0))
    energies = frame_energies_db(clip, frame_ms)
    floor = min(float(energies.min()), silence_floor_db)
    speech = energies > floor + threshold_db_rel

    segments = []
    start = None
    for i, is_speech in enumerate(speech):
        if is_speech and start is None:
            start = i
        elif not is_speech and start is not None:
            segments.append((start, i))
            start = None
    if start is not None:
        segments.append((start, len(speech)))

    n = len(clip)
    pieces = [clip.samples[s * flen:min(e * flen, n)] for s, e in segments]
    stripped = np.concatenate(pieces) if pieces else np.empty(0)
    return (VadSegments(tuple(segments), frame_ms),
            AudioClip(stripped, clip.sample_rate))
