"""Run configurations, result records and their canonical JSON form."""

from __future__ import annotations

import hashlib
import json
from datetime import datetime, timezone
from enum import IntEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .. import __version__
from ..scalars import parse_scalar, scalar_to_text

PARAM_NAMES = ("l1", "l2", "l3", "l4", "h1", "h2", "c")


class ExitStatus(IntEnum):
    OK = 0
    DEFECT = 2
    INCONCLUSIVE = 3
    INPUT_ERROR = 4


def canonical_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class RunConfig(BaseModel):
    """One subcommand invocation with every input spelled out.

    ``params`` holds exact scalars as text, normalized so that "2/4" and
    "1/2" name the same run; ``overrides`` holds window and truncation sizes;
    ``options`` holds the remaining text and flag inputs.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    subcommand: str
    params: dict[str, str] = Field(default_factory=dict)
    overrides: dict[str, int] = Field(default_factory=dict)
    options: dict[str, str | bool] = Field(default_factory=dict)
    output: str | None = None

    @field_validator("params", mode="before")
    @classmethod
    def _normalize_params(cls, value: Any) -> Any:
        if not isinstance(value, dict):
            return value
        out = {}
        for name, raw in value.items():
            if name not in PARAM_NAMES:
                raise ValueError(f"unknown parameter {name!r} (known: {', '.join(PARAM_NAMES)})")
            if isinstance(raw, float):
                raise ValueError(f"{name} must be an exact rational string, got float {raw}")
            out[name] = scalar_to_text(parse_scalar(raw))
        return out

    @property
    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON of everything but the output path."""
        return sha256_hex(canonical_json(self.model_dump(mode="json", exclude={"output"})))

    def param(self, name: str) -> str | None:
        return self.params.get(name)

    def int_option(self, name: str, default: int) -> int:
        return self.overrides.get(name, default)

    def text_option(self, name: str, default: str | None = None) -> str | None:
        value = self.options.get(name, default)
        return value if value is None else str(value)

    def flag(self, name: str) -> bool:
        return bool(self.options.get(name, False))


class ResultRecord(BaseModel):
    """Payload of one run together with the configuration that reproduces it."""

    model_config = ConfigDict(extra="forbid")

    config: RunConfig
    config_hash: str
    payload: Any
    status: ExitStatus
    version: str = __version__
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    @classmethod
    def of(cls, config: RunConfig, payload: Any, status: ExitStatus) -> ResultRecord:
        return cls(config=config, config_hash=config.config_hash, payload=payload, status=status)

    def to_json_line(self) -> str:
        return canonical_json(self.model_dump(mode="json"))
