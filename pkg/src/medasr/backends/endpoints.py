"""HTTP wire protocol for real model backends.

All four roles (generate, tts, transcribe, enhance) share one request/response
shape, JSON over POST:

    request:  {"role", "id", "input_text" | "input_audio_b64", "params": {}}
    response: {"id", "output_text" | "output_audio_b64", "model_info"}

Audio payloads are base64 PCM WAV.  TTS requests carry the style parameters
(alpha, beta, diffusion_steps, embedding_scale) verbatim in ``params``.  Text
generation is two-stage on the wire: a "context" call followed by a
"sentence" call that includes the returned context, mirroring how the
deterministic mock fills both stages locally.
"""

import base64
import json
import os
import socket
import time
import urllib.error
import urllib.request
import uuid
from dataclasses import dataclass, field

from medasr.audio.clip import AudioClip
from medasr.audio.wavio import clip_from_wav_bytes, wav_bytes
from medasr.errors import BackendError, BackendTimeout, SchemaError

ROLES = ("generate", "tts", "transcribe", "enhance")
ENDPOINT_ENV_PREFIX = "MEDASR_ENDPOINT_"


@dataclass(frozen=True)
class BackendEndpoint:
    base_url: str
    role: str
    timeout_ms: int = 10000
    max_retries: int = 2
    bearer_token: str | None = None

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        if self.timeout_ms <= 0:
            raise ValueError("timeout_ms must be positive")
        if self.max_retries < 0:
            raise ValueError("max_retries must be non-negative")


def endpoint_from_env(role: str, **kwargs) -> BackendEndpoint | None:
    """Build an endpoint from MEDASR_ENDPOINT_<ROLE> if the variable is set."""
    url = os.environ.get(ENDPOINT_ENV_PREFIX + role.upper())
    if not url:
        return None
    return BackendEndpoint(base_url=url, role=role, **kwargs)


@dataclass(frozen=True)
class WireRequest:
    role: str
    id: str
    input_text: str | None = None
    input_audio_b64: str | None = None
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class WireResponse:
    id: str
    output_text: str | None = None
    output_audio_b64: str | None = None
    model_info: str = ""


def _parse_response(raw: bytes) -> WireResponse:
    try:
        obj = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"response body is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "id" not in obj:
        raise SchemaError("response missing required field 'id'")
    if obj.get("output_text") is None and obj.get("output_audio_b64") is None:
        raise SchemaError("response carries neither output_text nor output_audio_b64")
    return WireResponse(
        id=str(obj["id"]),
        output_text=obj.get("output_text"),
        output_audio_b64=obj.get("output_audio_b64"),
        model_info=str(obj.get("model_info", "")),
    )


def remote_call(endpoint: BackendEndpoint, request: WireRequest,
                backoff_s: float = 0.5) -> WireResponse:
    """POST a request, retrying timeouts with exponential backoff.

    Raises BackendError on a non-success HTTP status, BackendTimeout once
    max_retries extra attempts are exhausted, SchemaError on a malformed
    response body.
    """
    body = json.dumps({
        "role": request.role,
        "id": request.id,
        "input_text": request.input_text,
        "input_audio_b64": request.input_audio_b64,
        "params": request.params,
    }).encode("utf-8")
    headers = {"Content-Type": "application/json"}
    if endpoint.bearer_token:
        headers["Authorization"] = f"Bearer {endpoint.bearer_token}"

    attempts = endpoint.max_retries + 1
    for attempt in range(attempts):
        req = urllib.request.Request(endpoint.base_url, data=body,
                                     headers=headers, method="POST")
        try:
            with urllib.request.urlopen(req, timeout=endpoint.timeout_ms / 1000.0) as resp:
                return _parse_response(resp.read())
        except urllib.error.HTTPError as exc:
            raise BackendError(f"{endpoint.role} backend returned status {exc.code}",
                               status=exc.code) from exc
        except (socket.timeout, TimeoutError) as exc:
            last = exc
        except urllib.error.URLError as exc:
            if isinstance(exc.reason, (socket.timeout, TimeoutError)):
                last = exc
            else:
                raise BackendError(
                    f"{endpoint.role} backend unreachable: {exc.reason}") from exc
        if attempt < attempts - 1:
            time.sleep(backoff_s * (2 ** attempt))
    raise BackendTimeout(
        f"{endpoint.role} backend timed out after {attempts} attempts "
        f"({endpoint.timeout_ms} ms each)") from last


_REQUEST_NS = uuid.UUID("6ba7b811-9dad-11d1-80b4-00c04fd430c8")


def _request_id(*parts) -> str:
    return str(uuid.uuid5(_REQUEST_NS, "\x1f".join(str(p) for p in parts)))


class RemoteTextGenerator:
    """Two-stage remote sentence generation (context, then sentence)."""

    def __init__(self, endpoint: BackendEndpoint, backoff_s: float = 0.5):
        self.endpoint = endpoint
        self.backoff_s = backoff_s

    def generate(self, term: str, description: str, seed: int) -> tuple[str, str]:
        rid = _request_id("generate", term, seed)
        ctx = remote_call(self.endpoint, WireRequest(
            role="generate", id=rid, input_text=term,
            params={"stage": "context", "description": description, "seed": seed},
        ), self.backoff_s)
        if ctx.output_text is None:
            raise SchemaError("context stage returned no output_text")
        sent = remote_call(self.endpoint, WireRequest(
            role="generate", id=rid, input_text=term,
            params={"stage": "sentence", "context": ctx.output_text,
                    "description": description, "seed": seed},
        ), self.backoff_s)
        if sent.output_text is None:
            raise SchemaError("sentence stage returned no output_text")
        return ctx.output_text, sent.output_text


class RemoteTtsBackend:
    def __init__(self, endpoint: BackendEndpoint, backoff_s: float = 0.5):
        self.endpoint = endpoint
        self.backoff_s = backoff_s

    def tts(self, text: str, voice: str, style) -> AudioClip:
        resp = remote_call(self.endpoint, WireRequest(
            role="tts", id=_request_id("tts", voice, text), input_text=text,
            params={"voice": voice, "alpha": style.alpha, "beta": style.beta,
                    "diffusion_steps": style.diffusion_steps,
                    "embedding_scale": style.embedding_scale},
        ), self.backoff_s)
        if resp.output_audio_b64 is None:
            raise SchemaError("tts response carries no output_audio_b64")
        return clip_from_wav_bytes(base64.b64decode(resp.output_audio_b64))


class RemoteTranscriber:
    def __init__(self, endpoint: BackendEndpoint, backoff_s: float = 0.5):
        self.endpoint = endpoint
        self.backoff_s = backoff_s

    def transcribe(self, entry, clip: AudioClip | None = None) -> str:
        audio_b64 = (base64.b64encode(wav_bytes(clip)).decode("ascii")
                     if clip is not None else None)
        resp = remote_call(self.endpoint, WireRequest(
            role="transcribe", id=entry.id, input_audio_b64=audio_b64,
            params={} if clip is not None else {"text_only": True},
        ), self.backoff_s)
        if resp.output_text is None:
            raise SchemaError("transcribe response carries no output_text")
        return resp.output_text


class RemoteEnhancer:
    def __init__(self, endpoint: BackendEndpoint, backoff_s: float = 0.5):
        self.endpoint = endpoint
        self.backoff_s = backoff_s

    def enhance(self, text: str) -> str:
        resp = remote_call(self.endpoint, WireRequest(
            role="enhance", id=_request_id("enhance", text), input_text=text,
        ), self.backoff_s)
        if resp.output_text is None:
            raise SchemaError("enhance response carries no output_text")
        return resp.output_text
