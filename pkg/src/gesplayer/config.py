"""Engine tuning knobs and the flat key/value config file format.

A config file holds one `key = value` pair per line, with `#` comments and
blank lines allowed.  Keys mirror the FsmConfig field names exactly:

    trigger_hold_ms = 300
    touch_begin_ratio = 0.08
    volume_pointer = middle
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from gesplayer import features


@dataclass(frozen=True)
class FsmConfig:
    # trigger: continuous left open palm required to arm, milliseconds
    trigger_hold_ms: int = 300
    # seek touch hysteresis, as fractions of the baseline segment length
    touch_begin_ratio: float = 0.08
    touch_release_ratio: float = 0.16
    # volume/brightness engagement gate, fraction of segment length
    engage_max_dist_ratio: float = 0.75
    # tolerated tracking dropout before the machine lets go, milliseconds
    dropout_grace_ms: int = 150
    min_segment_len: float = 0.05
    finger_extend_ratio: float = features.FINGER_EXTEND_RATIO
    thumb_extend_ratio: float = features.THUMB_EXTEND_RATIO
    # which right-hand fingertip drives the volume bar: "middle" or "index"
    volume_pointer: str = "middle"
    smoothing_tau_ms: float = 100.0

    def __post_init__(self) -> None:
        if not self.touch_begin_ratio < self.touch_release_ratio:
            raise ValueError(
                "touch_begin_ratio must be smaller than touch_release_ratio"
            )
        positives = (
            "trigger_hold_ms",
            "touch_begin_ratio",
            "touch_release_ratio",
            "engage_max_dist_ratio",
            "dropout_grace_ms",
            "min_segment_len",
            "finger_extend_ratio",
            "thumb_extend_ratio",
            "smoothing_tau_ms",
        )
        for name in positives:
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.volume_pointer not in ("middle", "index"):
            raise ValueError("volume_pointer must be 'middle' or 'index'")


def parse_config_text(text: str) -> FsmConfig:
    """Parse flat `key = value` text into an FsmConfig.

    Unknown keys and unparsable values raise ValueError so a typo never
    silently falls back to a default.
    """
    types = {f.name: f.type for f in fields(FsmConfig)}
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key = key.strip()
        value = value.strip()
        if key not in types:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        if types[key] == "int":
            values[key] = int(value)
        elif types[key] == "float":
            values[key] = float(value)
        else:
            values[key] = value
    return FsmConfig(**values)  # type: ignore[arg-type]


def load_config(path: str) -> FsmConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read())


def config_text(cfg: FsmConfig) -> str:
    """Render a config back to the flat file format."""
    return "".join(f"{f.name} = {getattr(cfg, f.name)}\n" for f in fields(FsmConfig))
