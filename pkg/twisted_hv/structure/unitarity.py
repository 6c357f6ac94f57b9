"""Closed-form unitarity classification and the discrete series."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Any

from sympy import QQ

from ..pbwmod import ModuleKind, ModuleSpec
from ..scalars import ScalarLike, format_rational, is_real, parse_scalar
from .errors import PreconditionError


def discrete_central_charge(m: int):
    """c_m = 1 - 6/(m(m+1)) for m >= 2."""
    if m < 2:
        raise PreconditionError(f"discrete series starts at m = 2, got {m}")
    return QQ(1) - QQ(6, m * (m + 1))


def discrete_weight(m: int, r: int, s: int):
    """h^m_{r,s} = ((r(m+1) - s m)^2 - 1) / (4 m (m+1)) for 1 <= s <= r <= m-1."""
    if not 1 <= s <= r <= m - 1:
        raise PreconditionError(f"need 1 <= s <= r <= m-1, got m={m}, r={r}, s={s}")
    return QQ((r * (m + 1) - s * m) ** 2 - 1, 4 * m * (m + 1))


def discrete_weights(m: int) -> dict[tuple[int, int], Any]:
    return {(r, s): discrete_weight(m, r, s) for r in range(1, m) for s in range(1, r + 1)}


def discrete_series_index(c) -> int | None:
    """The m >= 2 with c = c_m, or None.

    m(m+1) = 6/(1-c) must be an integer N with 1 + 4N a perfect square.
    """
    c = QQ.convert(c)
    if c >= 1:
        return None
    t = QQ(6) / (QQ(1) - c)
    if t.denominator != 1:
        return None
    n = int(t.numerator)
    disc = 1 + 4 * n
    root = isqrt(disc)
    if root * root != disc:
        return None
    m = (root - 1) // 2
    return m if m >= 2 else None


def _find_weight(m: int, h) -> tuple[int, int] | None:
    for (r, s), value in discrete_weights(m).items():
        if value == h:
            return r, s
    return None


@dataclass(frozen=True)
class UnitarityVerdict:
    unitary: bool
    case: str | None  # "continuum", "c_m" or "1+c_m"
    reason: str
    m: int | None = None
    r: int | None = None
    s: int | None = None

    def to_json(self) -> dict:
        data: dict[str, Any] = {"unitary": self.unitary, "case": self.case}
        for name in ("m", "r", "s"):
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        data["reason"] = self.reason
        return data


def _real(name: str, value: ScalarLike):
    s = parse_scalar(value)
    if not is_real(s):
        raise PreconditionError(f"{name} must be a real rational, got a complex value")
    return s.x


def unitarity_classify(
    l1: ScalarLike,
    l2: ScalarLike,
    l3: ScalarLike,
    h1: ScalarLike | None = None,
    h2: ScalarLike | None = None,
) -> UnitarityVerdict:
    """Unitarity of the simple vertex operator algebra, or of its module when h1, h2 are given.

    Unitary exactly when l2 = 0 and either l3 = 0 with l1 >= 1 or l1 = c_m,
    or l3 > 0 with l1 >= 2 or l1 = 1 + c_m. For modules the lowest weight
    enters through h1 when l3 = 0 (where h2 must vanish) and through
    h1 - h2^2/(2 l3) otherwise.
    """
    if (h1 is None) != (h2 is None):
        raise PreconditionError("module unitarity needs both h1 and h2")
    l1, l2, l3 = _real("l1", l1), _real("l2", l2), _real("l3", l3)
    module = h1 is not None
    if module:
        h1, h2 = _real("h1", h1), _real("h2", h2)
    if l2:
        return UnitarityVerdict(False, None, "unitarity requires l2 = 0")
    if l3 < 0:
        return UnitarityVerdict(False, None, "l3 < 0 gives I(-1) negative norm")
    if l3 == 0:
        threshold, shift, label = 1, 0, "c_m"
        if module and h2:
            return UnitarityVerdict(False, None, "l3 = 0 requires h2 = 0")
        weight = h1
    else:
        threshold, shift, label = 2, 1, "1+c_m"
        weight = h1 - h2**2 / (2 * l3) if module else None

    if l1 >= threshold:
        if module and weight < 0:
            return UnitarityVerdict(
                False, None, f"continuum l1 >= {threshold} needs weight >= 0, got {format_rational(weight)}"
            )
        return UnitarityVerdict(True, "continuum", f"l1 >= {threshold}")

    m = discrete_series_index(l1 - shift)
    if m is None:
        return UnitarityVerdict(
            False, None, f"l1 = {format_rational(l1)} is below {threshold} and not {label}"
        )
    if not module:
        return UnitarityVerdict(True, label, f"l1 = {label} with m = {m}", m=m)
    rs = _find_weight(m, weight)
    if rs is None:
        return UnitarityVerdict(
            False, None, f"weight {format_rational(weight)} is not h^{m}_(r,s)", m=m
        )
    r, s = rs
    return UnitarityVerdict(True, label, f"l1 = {label}, weight h^{m}_({r},{s})", m=m, r=r, s=s)


@dataclass(frozen=True)
class UnitarityCase:
    """A parameter point on which the classifier and the form scan are compared."""

    l1: Any
    l2: Any
    l3: Any
    h1: Any = None
    h2: Any = None

    @property
    def is_module(self) -> bool:
        return self.h1 is not None

    def spec(self) -> ModuleSpec:
        if self.is_module:
            return ModuleSpec.build(
                ModuleKind.VERMA_HV1, l1=self.l1, l2=self.l2, l3=self.l3, h1=self.h1, h2=self.h2
            )
        return ModuleSpec.build(ModuleKind.VACUUM_HV1, l1=self.l1, l2=self.l2, l3=self.l3)

    def classify(self) -> UnitarityVerdict:
        return unitarity_classify(self.l1, self.l2, self.l3, self.h1, self.h2)

    def to_json(self) -> dict:
        data = {"l1": str(self.l1), "l2": str(self.l2), "l3": str(self.l3)}
        if self.is_module:
            data.update(h1=str(self.h1), h2=str(self.h2))
        return data


def minimal_model_grid() -> list[UnitarityCase]:
    """Unitary points from both cases plus one violation of each condition.

    Every violation shows a negative norm (or an asymmetric form) by degree 2.
    """
    c3 = format_rational(discrete_central_charge(3))
    c4 = format_rational(discrete_central_charge(4))
    one_plus_c3 = format_rational(1 + discrete_central_charge(3))
    h_22 = format_rational(discrete_weight(3, 2, 2))
    return [
        UnitarityCase(c3, "0", "0"),
        UnitarityCase(c4, "0", "0"),
        UnitarityCase("1", "0", "0"),
        UnitarityCase(one_plus_c3, "0", "1"),
        UnitarityCase("2", "0", "1"),
        UnitarityCase("1", "0", "0", h1="1", h2="0"),
        UnitarityCase("2", "0", "1", h1="1/2", h2="1"),
        UnitarityCase(one_plus_c3, "0", "1", h1=h_22, h2="0"),
        UnitarityCase("2", "1", "1"),
        UnitarityCase("2", "0", "-1"),
        UnitarityCase("2", "0", "1", h1="0", h2="1"),
        UnitarityCase("-1", "0", "1"),
    ]
