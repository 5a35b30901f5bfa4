import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gesplayer.scenarios import Scenario

REPO_ROOT = Path(__file__).resolve().parent.parent
TRACES_DIR = REPO_ROOT / "traces"

# Parameters behind the committed trace files in traces/.  The acceptance
# suite regenerates each one and compares bytes, so this table and the
# files cannot drift apart silently.
BUNDLED: dict[str, Scenario] = {
    "seek-sweep": Scenario("seek-sweep", duration_ms=6000, fps=30.0, noise_sigma=0.0, seed=7),
    "volume-set": Scenario("volume-set", duration_ms=3000, fps=30.0, noise_sigma=0.0, seed=11),
    "brightness-set": Scenario("brightness-set", duration_ms=3000, fps=30.0, noise_sigma=0.0, seed=12),
    "idle-noise": Scenario("idle-noise", duration_ms=10000, fps=30.0, noise_sigma=0.01, seed=3),
    "false-trigger": Scenario("false-trigger", duration_ms=10000, fps=30.0, noise_sigma=0.005, seed=4),
    "hysteresis-oscillation": Scenario("hysteresis-oscillation", duration_ms=4000, fps=30.0, noise_sigma=0.0, seed=5),
}


def bundled_lines(name: str) -> list[str]:
    return (TRACES_DIR / f"{name}.jsonl").read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def traces_dir() -> Path:
    return TRACES_DIR
