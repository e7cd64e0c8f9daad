"""Runtime configuration: resource caps, cache location, output format."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Optional

CACHE_ENV = "PACKSYZ_CACHE_DIR"


@dataclass(frozen=True)
class Config:
    max_simplices: int = 5_000_000
    max_oracle_entries: int = 2_000_000
    cache_dir: Optional[str] = None
    output_format: str = "text"
    threads: int = 1

    def __post_init__(self):
        if self.max_simplices <= 0 or self.max_oracle_entries <= 0:
            raise ValueError("resource caps must be positive")
        if self.threads <= 0:
            raise ValueError("threads must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_mapping(cls, data: dict) -> "Config":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path) -> "Config":
        with open(path) as fh:
            return cls.from_mapping(json.load(fh))

    def with_env(self) -> "Config":
        env = os.environ.get(CACHE_ENV)
        if env:
            return replace(self, cache_dir=env)
        return self

    def cache_path(self) -> Optional[Path]:
        return Path(self.cache_dir) if self.cache_dir else None

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT = Config()
