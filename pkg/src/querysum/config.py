"""Pipeline configuration: every tunable constant in one place."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path


class ConfigError(ValueError):
    """Raised for unknown keys or out-of-range values."""


@dataclass(frozen=True)
class PipelineConfig:
    min_base_fraction: float = 0.04
    ngd_threshold: float = 0.7
    merge_overlap: float = 0.5
    min_split_gap: float = 0.2
    selection_beta: float = 0.5
    lookahead: int = 3
    max_clusters: int = 10
    relevance_threshold: float = 0.5
    damping: float = 0.85
    epsilon: float = 1e-4
    max_iter: int = 100
    default_summary_sentences: int = 5

    def __post_init__(self) -> None:
        if not 0 < self.min_base_fraction <= 1:
            raise ConfigError("min_base_fraction must be in (0, 1]")
        if self.ngd_threshold < 0:
            raise ConfigError("ngd_threshold must be >= 0")
        if not 0 <= self.merge_overlap <= 1:
            raise ConfigError("merge_overlap must be in [0, 1]")
        if self.min_split_gap < 0:
            raise ConfigError("min_split_gap must be >= 0")
        if self.selection_beta < 0:
            raise ConfigError("selection_beta must be >= 0")
        if self.lookahead < 1:
            raise ConfigError("lookahead must be >= 1")
        if self.max_clusters < 1:
            raise ConfigError("max_clusters must be >= 1")
        if self.relevance_threshold < 0:
            raise ConfigError("relevance_threshold must be >= 0")
        if not 0 < self.damping < 1:
            raise ConfigError("damping must be in (0, 1)")
        if self.epsilon <= 0:
            raise ConfigError("epsilon must be > 0")
        if self.max_iter < 1:
            raise ConfigError("max_iter must be >= 1")
        if self.default_summary_sentences < 1:
            raise ConfigError("default_summary_sentences must be >= 1")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | Path) -> "PipelineConfig":
        try:
            data = json.loads(Path(path).read_text("utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        return cls.from_dict(data)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
