"""Training-config emission for the external fine-tuning stage.

The toolkit never trains models; it emits flat key=value config files that a
fine-tuning job consumes, and can parse them back.  Two roles exist: the ASR
model (step-based schedule, WER-selected) and the semantic enhancer
(CER-evaluated).  An alternative epoch-based ASR preset is kept available
because both schedules circulate for this model family.
"""

from dataclasses import dataclass, fields
from pathlib import Path

from medasr.errors import SchemaError

ASR_CONFIG_FILENAME = "asr.conf"
ENHANCER_CONFIG_FILENAME = "enhancer.conf"


@dataclass(frozen=True)
class TrainingConfig:
    model_role: str
    learning_rate: float
    batch_size_per_device: int
    metric: str
    warmup_steps: int | None = None
    max_steps: int | None = None
    eval_every_steps: int | None = None
    max_generation_tokens: int | None = None
    epochs: int | None = None


def asr_defaults() -> TrainingConfig:
    return TrainingConfig(
        model_role="asr",
        learning_rate=1e-5,
        batch_size_per_device=1,
        metric="WER",
        warmup_steps=500,
        max_steps=5000,
        eval_every_steps=1000,
        max_generation_tokens=225,
    )


def asr_epoch_preset() -> TrainingConfig:
    """Epoch-based alternative schedule (batch 16, 10 epochs)."""
    return TrainingConfig(
        model_role="asr",
        learning_rate=1e-5,
        batch_size_per_device=16,
        metric="WER",
        epochs=10,
    )


def enhancer_defaults() -> TrainingConfig:
    return TrainingConfig(
        model_role="enhancer",
        learning_rate=4e-4,
        batch_size_per_device=8,
        metric="CER",
    )


def emit_training_config(config: TrainingConfig, path) -> None:
    """Write key=value lines; unset optional fields are omitted."""
    lines = []
    for f in fields(TrainingConfig):
        value = getattr(config, f.name)
        if value is None:
            continue
        lines.append(f"{f.name}={value!r}" if isinstance(value, str)
                     else f"{f.name}={value}")
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_training_config(path) -> TrainingConfig:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(),
                                  start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SchemaError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = line.split("=", 1)
        raw[key.strip()] = value.strip()

    known = {f.name: f for f in fields(TrainingConfig)}
    kwargs = {}
    for key, text in raw.items():
        if key not in known:
            raise SchemaError(f"{path}: unknown config key {key!r}")
        if key in ("model_role", "metric"):
            kwargs[key] = text.strip("'\"")
        elif key in ("learning_rate",):
            kwargs[key] = float(text)
        else:
            kwargs[key] = int(text)
    for required in ("model_role", "learning_rate", "batch_size_per_device", "metric"):
        if required not in kwargs:
            raise SchemaError(f"{path}: missing required key {required!r}")
    return TrainingConfig(**kwargs)


def emit_training_configs(out_dir, asr: TrainingConfig | None = None,
                          enhancer: TrainingConfig | None = None) -> tuple[Path, Path]:
    """Write both role configs under ``out_dir``; returns their paths."""
    out_dir = Path(out_dir)
    asr_path = out_dir / ASR_CONFIG_FILENAME
    enh_path = out_dir / ENHANCER_CONFIG_FILENAME
    emit_training_config(asr or asr_defaults(), asr_path)
    emit_training_config(enhancer or enhancer_defaults(), enh_path)
    return asr_path, enh_path
