"""Common error base and name suggestions for user-facing lookups."""

from __future__ import annotations

from typing import Iterable

from rapidfuzz import fuzz


class HVError(Exception):
    """Base class for every error raised by twisted-hv."""


def did_you_mean(query: str, choices: Iterable[str], cutoff: float = 60.0) -> str | None:
    """Closest known name to ``query`` by RapidFuzz ratio, if any is close enough."""
    best, best_score = None, 0.0
    for choice in choices:
        score = fuzz.WRatio(query.lower(), choice.lower())
        if score > best_score:
            best, best_score = choice, score
    return best if best_score >= cutoff else None


def unknown_name_message(kind: str, query: str, choices: Iterable[str]) -> str:
    choices = list(choices)
    hint = did_you_mean(query, choices)
    suffix = f"; did you mean {hint!r}?" if hint else ""
    return f"unknown {kind} {query!r}{suffix} (known: {', '.join(choices)})"
