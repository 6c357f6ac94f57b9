"""Finitely supported two-variable Laurent coefficient tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Union

from ..errors import HVError
from ..liealg import LieElt
from ..scalars import Scalar, binom, scalar_to_json

Coefficient = Union[LieElt, Scalar]


class InvalidWindowError(HVError, ValueError):
    """Raised for a window with a negative half-width."""


@dataclass(frozen=True)
class WindowBounds:
    """Inclusive exponent ranges: p for x1, q for x2."""

    pmin: int
    pmax: int
    qmin: int
    qmax: int

    @classmethod
    def square(cls, width: int) -> WindowBounds:
        if width < 0:
            raise InvalidWindowError(f"window half-width must be >= 0, got {width}")
        return cls(-width, width, -width, width)

    def is_empty(self) -> bool:
        return self.pmin > self.pmax or self.qmin > self.qmax

    def contains(self, p: int, q: int) -> bool:
        return self.pmin <= p <= self.pmax and self.qmin <= q <= self.qmax

    def points(self) -> Iterator[tuple[int, int]]:
        for p in range(self.pmin, self.pmax + 1):
            for q in range(self.qmin, self.qmax + 1):
                yield p, q

    def interior(self, k: int) -> WindowBounds:
        """Points whose (x1 - x2)^k product only reads coefficients inside the window."""
        return WindowBounds(self.pmin + k, self.pmax, self.qmin + k, self.qmax)


def add(a: Coefficient | None, b: Coefficient | None) -> Coefficient | None:
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def scale(value: Coefficient | None, c: Any) -> Coefficient | None:
    if value is None:
        return None
    if isinstance(value, LieElt):
        return value.scale(c)
    return value * c


def negate(value: Coefficient | None) -> Coefficient | None:
    return None if value is None else -value


def coefficient_to_json(value: Coefficient) -> Any:
    if isinstance(value, LieElt):
        return value.to_json()
    return scalar_to_json(value)


class BiLaurentWindow:
    """Sparse map (p, q) -> coefficient of x1^p x2^q, restricted to its bounds."""

    def __init__(self, bounds: WindowBounds, entries: dict[tuple[int, int], Coefficient]):
        for p, q in entries:
            if not bounds.contains(p, q):
                raise ValueError(f"entry ({p},{q}) outside window {bounds}")
        self.bounds = bounds
        self._entries = {pq: v for pq, v in entries.items() if v is not None and v}

    @classmethod
    def tabulate(
        cls, bounds: WindowBounds, fn: Callable[[int, int], Coefficient | None]
    ) -> BiLaurentWindow:
        return cls(bounds, {(p, q): v for p, q in bounds.points() if (v := fn(p, q)) is not None})

    def get(self, p: int, q: int) -> Coefficient | None:
        return self._entries.get((p, q))

    def items(self) -> list[tuple[tuple[int, int], Coefficient]]:
        return sorted(self._entries.items())

    def is_zero(self) -> bool:
        return not self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __sub__(self, other: BiLaurentWindow) -> BiLaurentWindow:
        keys = set(self._entries) | set(other._entries)
        return BiLaurentWindow(
            self.bounds, {pq: add(self.get(*pq), negate(other.get(*pq))) for pq in keys}
        )

    def multiply_by_difference_power(self, k: int) -> BiLaurentWindow:
        """(x1 - x2)^k times this table, kept on the truncation-safe interior."""
        inner = self.bounds.interior(k)
        entries: dict[tuple[int, int], Coefficient] = {}
        if inner.is_empty():
            return BiLaurentWindow(inner, entries)
        for p, q in inner.points():
            acc = None
            for i in range(k + 1):
                term = self.get(p - k + i, q - i)
                acc = add(acc, scale(term, binom(k, i) * (-1) ** i))
            if acc is not None:
                entries[(p, q)] = acc
        return BiLaurentWindow(inner, entries)

    def to_json(self) -> list[dict]:
        return [{"p": p, "q": q, "value": coefficient_to_json(v)} for (p, q), v in self.items()]
