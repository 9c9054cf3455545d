"""Model configuration with defaults matching the reference parameter set."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

DEFAULT_FALLBACK = "I could not find that in the leaflet."


@dataclass(frozen=True)
class ModelConfig:
    a: float = 10.0
    b: float = 20.0
    r_a: float = 12.0
    r_b: float = 14.0
    epsilon: float = 0.1
    m: float = 2.0
    stoplist_path: str | None = None
    top_k: int = 3
    fallback_text: str = DEFAULT_FALLBACK

    def __post_init__(self):
        for name in ("a", "b", "r_a", "r_b"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.m <= 1.0:
            raise ValueError("m must exceed 1")
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")

    def to_dict(self) -> dict:
        return asdict(self)


def config_from_dict(data: dict) -> ModelConfig:
    unknown = set(data) - set(ModelConfig.__dataclass_fields__)
    if unknown:
        raise ValueError(f"unknown configuration keys: {sorted(unknown)}")
    return ModelConfig(**data)


def load_config(path: str | None) -> ModelConfig:
    """Read a JSON config file; absent fields fall back to the defaults."""
    if path is None:
        return ModelConfig()
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON in config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("config file must contain a JSON object")
    return config_from_dict(data)
