"""Dataset manifest: one JSON object per line, UTF-8.

Fields per line: id, audio_path, text, duration_s, voice,
style{alpha, beta, diffusion_steps, embedding_scale}, source.
Reading back a written manifest reproduces the entries exactly, in file
order.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from medasr.errors import SchemaError

VOICES = ("male", "female")


@dataclass(frozen=True)
class TtsStyleParams:
    """Diffusion-TTS style controls recorded per corpus entry."""

    alpha: float = 0.3
    beta: float = 0.7
    diffusion_steps: int = 6
    embedding_scale: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")
        if self.diffusion_steps <= 0:
            raise ValueError("diffusion_steps must be positive")
        if self.embedding_scale <= 0:
            raise ValueError("embedding_scale must be positive")


@dataclass(frozen=True)
class ManifestEntry:
    id: str
    audio_path: str
    text: str
    duration_s: float
    voice: str
    style: TtsStyleParams
    source: str = ""


_REQUIRED = ("id", "audio_path", "text", "duration_s", "voice", "style")
_STYLE_FIELDS = ("alpha", "beta", "diffusion_steps", "embedding_scale")


def entry_to_dict(entry: ManifestEntry) -> dict:
    return {
        "id": entry.id,
        "audio_path": entry.audio_path,
        "text": entry.text,
        "duration_s": entry.duration_s,
        "voice": entry.voice,
        "style": {
            "alpha": entry.style.alpha,
            "beta": entry.style.beta,
            "diffusion_steps": entry.style.diffusion_steps,
            "embedding_scale": entry.style.embedding_scale,
        },
        "source": entry.source,
    }


def entry_from_dict(obj: dict, where: str = "") -> ManifestEntry:
    for field in _REQUIRED:
        if field not in obj:
            raise SchemaError(f"{where}: missing field {field!r}")
    style_obj = obj["style"]
    if not isinstance(style_obj, dict):
        raise SchemaError(f"{where}: 'style' must be an object")
    for field in _STYLE_FIELDS:
        if field not in style_obj:
            raise SchemaError(f"{where}: style missing field {field!r}")
    try:
        style = TtsStyleParams(
            alpha=float(style_obj["alpha"]),
            beta=float(style_obj["beta"]),
            diffusion_steps=int(style_obj["diffusion_steps"]),
            embedding_scale=float(style_obj["embedding_scale"]),
        )
        return ManifestEntry(
            id=str(obj["id"]),
            audio_path=str(obj["audio_path"]),
            text=str(obj["text"]),
            duration_s=float(obj["duration_s"]),
            voice=str(obj["voice"]),
            style=style,
            source=str(obj.get("source", "")),
        )
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{where}: invalid field value: {exc}") from exc


def write_manifest(entries, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(json.dumps(entry_to_dict(entry), ensure_ascii=False,
                                separators=(",", ":")) + "\n")


def read_manifest(path) -> list[ManifestEntry]:
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"{path}:{lineno}: not valid JSON: {exc}") from exc
            entries.append(entry_from_dict(obj, where=f"{path}:{lineno}"))
    return entries
