"""PCM WAV reading and writing (RIFF, 16-bit little-endian, mono)."""

import io
import wave
from pathlib import Path

import numpy as np

from medasr.audio.clip import AudioClip
from medasr.errors import MalformedAudio

_SCALE = 32767.0


def write_wav(path, clip: AudioClip) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(wav_bytes(clip))


def wav_bytes(clip: AudioClip) -> bytes:
    """Serialize a clip to an in-memory 16-bit mono WAV."""
    q = np.round(np.clip(clip.samples, -1.0, 1.0) * _SCALE).astype("<i2")
    buf = io.BytesIO()
    with wave.open(buf, "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(2)
        wf.setframerate(clip.sample_rate)
        wf.writeframes(q.tobytes())
    return buf.getvalue()


def read_wav(path) -> AudioClip:
    with open(path, "rb") as fh:
        return clip_from_wav_bytes(fh.read())


def clip_from_wav_bytes(data: bytes) -> AudioClip:
    """Parse 16-bit mono PCM WAV bytes; anything else is MalformedAudio."""
    try:
        with wave.open(io.BytesIO(data), "rb") as wf:
            channels = wf.getnchannels()
            width = wf.getsampwidth()
            rate = wf.getframerate()
            frames = wf.readframes(wf.getnframes())
    except (wave.Error, EOFError) as exc:
        raise MalformedAudio(f"unreadable WAV: {exc}") from exc
    if channels != 1:
        raise MalformedAudio(f"expected mono audio, got {channels} channels")
    if width != 2:
        raise MalformedAudio(f"expected 16-bit samples, got {8 * width}-bit")
    q = np.frombuffer(frames, dtype="<i2").astype(np.float64)
    return AudioClip(np.maximum(q / _SCALE, -1.0), rate)


def read_wav_header(path):
    """(sample_rate, bit_depth, channels, n_frames) from a WAV header."""
    try:
        with wave.open(str(path), "rb") as wf:
            return (wf.getframerate(), 8 * wf.getsampwidth(),
                    wf.getnchannels(), wf.getnframes())
    except (wave.Error, EOFError, OSError) as exc:
        raise MalformedAudio(f"unreadable WAV header: {exc}") from exc
