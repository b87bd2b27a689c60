from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

DEFAULT_ENUMERATION_CAP = 10_000_000


def _package_dir() -> Path:
    return Path(__file__).resolve().parent.parent


@dataclass(frozen=True)
class Settings:
    enumeration_cap: int
    output_dir: Path
    seed: int
    debug: bool

    def with_overrides(
        self,
        enumeration_cap: Optional[int] = None,
        output_dir: Optional[Path] = None,
        seed: Optional[int] = None,
    ) -> "Settings":
        changes = {}
        if enumeration_cap is not None:
            changes["enumeration_cap"] = enumeration_cap
        if output_dir is not None:
            changes["output_dir"] = output_dir
        if seed is not None:
            changes["seed"] = seed
        return replace(self, **changes)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def load_settings() -> Settings:
    """
    Reads settings from the environment, after loading a `.env` file if present.
    """
    load_dotenv()
    base_dir = _package_dir()

    cap = _int_env("COXETER_ENUMERATION_CAP", DEFAULT_ENUMERATION_CAP)
    if cap < 1:
        raise ValueError("COXETER_ENUMERATION_CAP must be positive")

    return Settings(
        enumeration_cap=cap,
        output_dir=Path(os.getenv("COXETER_OUTPUT_DIR", str(base_dir / "output"))),
        seed=_int_env("COXETER_SEED", 0),
        debug=os.getenv("COXETER_DEBUG", "0") == "1",
    )


def default_enumeration_cap() -> int:
    return _int_env("COXETER_ENUMERATION_CAP", DEFAULT_ENUMERATION_CAP)
