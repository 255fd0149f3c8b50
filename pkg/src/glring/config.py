"""Run configuration: caps, output format, parallelism and sampling seed.

Values resolve as command-line flag, then ``GLRING_MAX_ELEMENTS`` (element
cap only), then a JSON config file, then the defaults below.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .errors import GLRingError

ENV_MAX_ELEMENTS = "GLRING_MAX_ELEMENTS"
FORMATS = ("json", "text", "dot")


class ConfigError(GLRingError):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_elements: int = 4096
    max_ideals: int = 1 << 16
    max_semiring_ideals: int = 1 << 16
    format: str = "json"
    jobs: int = 1
    seed: int = 0

    def __post_init__(self):
        for name in ("max_elements", "max_ideals", "max_semiring_ideals", "jobs"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError("seed must be an integer")

    def to_json(self) -> dict:
        return asdict(self)


def load_config_file(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config file must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(doc) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return doc


def resolve_config(flags: dict | None = None, *, config_path: str | Path | None = None,
                   env: dict | None = None) -> RunConfig:
    """Merge the layers; ``None`` flag values mean "not given"."""
    env = os.environ if env is None else env
    values: dict = {}
    if config_path is not None:
        values.update(load_config_file(config_path))
    if env.get(ENV_MAX_ELEMENTS):
        try:
            values["max_elements"] = int(env[ENV_MAX_ELEMENTS])
        except ValueError as exc:
            raise ConfigError(f"{ENV_MAX_ELEMENTS} must be an integer") from exc
    for k, v in (flags or {}).items():
        if v is not None:
            values[k] = v
    return RunConfig(**values)
