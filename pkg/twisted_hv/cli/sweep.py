"""Batch runs over a parameter grid read from YAML or JSON."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..config import settings
from ..tracing import trace_span
from .commands import config_from_mapping
from .errors import ConfigError
from .records import ExitStatus, RunConfig
from .runner import run
from .store import ResultStore

logger = logging.getLogger(__name__)


class SweepGrid(BaseModel):
    """``command`` is run once per entry of ``grid``; ``options`` are shared by all entries."""

    model_config = ConfigDict(extra="forbid")

    command: str
    options: dict[str, Any] = Field(default_factory=dict)
    grid: list[dict[str, Any]] = Field(default_factory=list)

    def configs(self) -> list[RunConfig]:
        return [config_from_mapping(self.command, {**self.options, **point}) for point in self.grid]


class SweepSummary(BaseModel):
    out: str
    total: int
    written: int
    skipped: int
    status: ExitStatus

    def to_json(self) -> dict[str, Any]:
        return self.model_dump(mode="json")


def load_grid(path: Path | str) -> SweepGrid:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read grid file {path}: {e}") from e
    try:
        data = json.loads(text) if path.suffix == ".json" else yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot parse grid file {path}: {e}") from e
    try:
        return SweepGrid.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"invalid grid file {path}: {e}") from e


def sweep(grid_path: Path | str, out_path: Path | str, workers: int | None = None) -> SweepSummary:
    """Run every grid entry whose config hash is not yet in ``out_path``.

    Entries run on a thread pool; records are appended in grid order by the
    calling thread. The summary status is the worst status among new records.
    """
    grid = load_grid(grid_path)
    configs = grid.configs()
    store = ResultStore(out_path)
    pending: list[RunConfig] = []
    seen: set[str] = set()
    for config in configs:
        h = config.config_hash
        if h in store or h in seen:
            continue
        seen.add(h)
        pending.append(config)
    skipped = len(configs) - len(pending)
    logger.info(f"sweep {grid.command}: {len(pending)} to run, {skipped} already recorded")

    workers = workers or settings.SWEEP_WORKERS
    written = 0
    status = ExitStatus.OK
    with trace_span("hv.sweep", {"hv.subcommand": grid.command, "hv.entries": len(pending)}):
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for i, record in enumerate(pool.map(run, pending), start=1):
                if store.append(record):
                    written += 1
                status = max(status, record.status)
                logger.info(f"sweep {grid.command}: {i}/{len(pending)} done")
    return SweepSummary(out=str(out_path), total=len(configs), written=written, skipped=skipped, status=status)
