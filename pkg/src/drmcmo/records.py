"""Per-run records and their JSON form."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

SCHEMA = "drmcmo.run-record/1"


@dataclass
class Checkpoint:
    generation: int
    evaluations: int
    igd: float | None
    hv: float | None
    n_feasible: int


@dataclass
class RunRecord:
    problem: str
    variant: str
    operator: str
    seed: int
    N: int
    max_fe: int
    evaluations: int = 0
    generations: int = 0
    activation_generation: int = 0
    truncated: bool = False
    checkpoints: list[Checkpoint] = field(default_factory=list)
    archive_objectives: list[list[float]] = field(default_factory=list)
    archive_cv: list[int] = field(default_factory=list)
    final_igd: float | None = None
    final_hv: float | None = None
    wall_time: float = 0.0
    status: str = "ok"
    error: str | None = None

    @property
    def key(self) -> str:
        return f"{self.problem}__{self.variant}__{self.operator}__s{self.seed}"

    @property
    def feasible_objectives(self) -> list[list[float]]:
        return [f for f, cv in zip(self.archive_objectives, self.archive_cv) if cv == 0]

    def to_dict(self) -> dict[str, Any]:
        return {"schema": SCHEMA, **asdict(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunRecord:
        data = dict(data)
        schema = data.pop("schema", None)
        if schema != SCHEMA:
            raise ValueError(f"unsupported record schema {schema!r}, expected {SCHEMA!r}")
        data["checkpoints"] = [Checkpoint(**c) for c in data.get("checkpoints", [])]
        return cls(**data)


def write_record(record: RunRecord, directory: str | Path) -> Path:
    """Write ``<key>.json`` atomically (temp file + rename)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / f"{record.key}.json"
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(record.to_dict(), fh, indent=1)
    os.replace(tmp, target)
    return target


def read_record(path: str | Path) -> RunRecord:
    with open(path) as fh:
        return RunRecord.from_dict(json.load(fh))
