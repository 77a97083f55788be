"""Run configuration shared by the CLI and scripts."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path


@dataclass
class Config:
    cutoff: int = 8
    max_weight: int = 8
    max_degree: int = 4
    field: str = "QQ(i)"
    seed: int = 0
    samples: int = 100
    format: str = "json"

    def __post_init__(self):
        if self.field not in ("QQ", "QQ(i)"):
            raise ValueError("field must be 'QQ' or 'QQ(i)'")
        if self.format not in ("json", "table"):
            raise ValueError("format must be 'json' or 'table'")
        for name in ("cutoff", "max_weight", "max_degree", "samples"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @classmethod
    def load(cls, path) -> "Config":
        data = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def to_json(self) -> dict:
        return asdict(self)
