"""Basis symbols and sparse elements of the four Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from ..errors import HVError
from ..scalars import ONE, Scalar, parse_scalar, scalar_from_json, scalar_to_json, scalar_to_text


class InvalidSymbolError(HVError, ValueError):
    """Raised for a symbol name, arity or index that the algebra does not have."""


class AlgebraMismatchError(HVError):
    """Raised when elements of different algebras are combined."""


class AlgebraId(str, Enum):
    HV1 = "hv1"  # rank-one twisted Heisenberg-Virasoro algebra
    FRAK1 = "frak1"  # its shifted presentation with L-bar, I-bar
    HV2 = "hv2"  # rank-two algebra on t1^m t2^n, E_{m,n}
    FRAK2HAT = "frak2hat"  # rank-two algebra on T^m (x) t^n, E^m (x) t^n


# name -> number of indices, in canonical variant order per algebra
SYMBOL_NAMES: dict[AlgebraId, dict[str, int]] = {
    AlgebraId.HV1: {"L": 1, "I": 1, "C1": 0, "C2": 0, "C3": 0},
    AlgebraId.FRAK1: {"Lbar": 1, "Ibar": 1, "C1": 0, "C2": 0, "C3": 0},
    AlgebraId.HV2: {"T": 2, "E": 2, "K1": 0, "K2": 0, "K3": 0, "K4": 0},
    AlgebraId.FRAK2HAT: {"That": 2, "Ehat": 2, "K1": 0, "K2": 0, "K3": 0, "K4": 0},
}


@dataclass(frozen=True)
class BasisSym:
    """A basis symbol such as L(2), C1, T(1,-1) or Ehat(0,3)."""

    algebra: AlgebraId
    name: str
    idx: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        names = SYMBOL_NAMES[self.algebra]
        if self.name not in names:
            raise InvalidSymbolError(f"{self.algebra.value} has no symbol {self.name!r}")
        if len(self.idx) != names[self.name]:
            raise InvalidSymbolError(
                f"{self.name} takes {names[self.name]} indices, got {len(self.idx)}"
            )
        if self.algebra is AlgebraId.HV2 and self.idx == (0, 0):
            raise InvalidSymbolError(f"{self.name}(0,0) is not a basis symbol of hv2")

    @property
    def is_central(self) -> bool:
        return not self.idx

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (list(SYMBOL_NAMES[self.algebra]).index(self.name), self.idx)

    def to_json(self) -> dict:
        return {"sym": self.name, "idx": list(self.idx)}

    def __str__(self) -> str:
        if not self.idx:
            return self.name
        return f"{self.name}({','.join(str(i) for i in self.idx)})"


def sym(algebra: AlgebraId | str, name: str, *idx: int) -> BasisSym:
    return BasisSym(AlgebraId(algebra), name, tuple(int(i) for i in idx))


def L(n: int) -> BasisSym:
    return BasisSym(AlgebraId.HV1, "L", (n,))


def I(n: int) -> BasisSym:  # noqa: E743
    return BasisSym(AlgebraId.HV1, "I", (n,))


def Lbar(n: int) -> BasisSym:
    return BasisSym(AlgebraId.FRAK1, "Lbar", (n,))


def Ibar(n: int) -> BasisSym:
    return BasisSym(AlgebraId.FRAK1, "Ibar", (n,))


def T(m: int, n: int) -> BasisSym:
    return BasisSym(AlgebraId.HV2, "T", (m, n))


def E(m: int, n: int) -> BasisSym:
    return BasisSym(AlgebraId.HV2, "E", (m, n))


def That(m: int, n: int) -> BasisSym:
    return BasisSym(AlgebraId.FRAK2HAT, "That", (m, n))


def Ehat(m: int, n: int) -> BasisSym:
    return BasisSym(AlgebraId.FRAK2HAT, "Ehat", (m, n))


def central(algebra: AlgebraId, name: str) -> BasisSym:
    return BasisSym(algebra, name)


class LieElt:
    """Sparse finite linear combination of basis symbols of one algebra.

    Instances are immutable; arithmetic returns new elements and never stores
    zero coefficients.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: AlgebraId, terms: Mapping[BasisSym, Scalar] | None = None):
        self.algebra = AlgebraId(algebra)
        clean: dict[BasisSym, Scalar] = {}
        for s, c in (terms or {}).items():
            if s.algebra is not self.algebra:
                raise AlgebraMismatchError(
                    f"symbol {s} of {s.algebra.value} in a {self.algebra.value} element"
                )
            if c:
                clean[s] = c
        self._terms = clean

    @classmethod
    def of(cls, s: BasisSym, coef: Scalar = ONE) -> LieElt:
        return cls(s.algebra, {s: coef})

    @classmethod
    def zero(cls, algebra: AlgebraId) -> LieElt:
        return cls(algebra)

    @classmethod
    def combine(cls, algebra: AlgebraId, pairs: Iterable[tuple[BasisSym, Scalar]]) -> LieElt:
        acc: dict[BasisSym, Scalar] = {}
        for s, c in pairs:
            acc[s] = acc[s] + c if s in acc else c
        return cls(algebra, acc)

    @property
    def terms(self) -> dict[BasisSym, Scalar]:
        return dict(self._terms)

    def items(self) -> list[tuple[BasisSym, Scalar]]:
        """Terms in canonical order (variant, then indices)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)

    def coefficient(self, s: BasisSym) -> Scalar:
        return self._terms.get(s, parse_scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[BasisSym, Scalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: LieElt) -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(
                f"cannot combine {self.algebra.value} with {other.algebra.value}"
            )

    def __add__(self, other: LieElt) -> LieElt:
        self._check(other)
        return LieElt.combine(self.algebra, [*self._terms.items(), *other._terms.items()])

    def __sub__(self, other: LieElt) -> LieElt:
        return self + (-other)

    def __neg__(self) -> LieElt:
        return LieElt(self.algebra, {s: -c for s, c in self._terms.items()})

    def scale(self, c: Scalar) -> LieElt:
        return LieElt(self.algebra, {s: c * v for s, v in self._terms.items()})

    def __rmul__(self, c) -> LieElt:
        return self.scale(parse_scalar(c))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElt):
            return NotImplemented
        return self.algebra is other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self._terms.items())))

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.value,
            "terms": [{**s.to_json(), "coef": scalar_to_json(c)} for s, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> LieElt:
        algebra = AlgebraId(data["algebra"])
        return cls.combine(
            algebra,
            [
                (BasisSym(algebra, t["sym"], tuple(t.get("idx", ()))), scalar_from_json(t["coef"]))
                for t in data.get("terms", [])
            ],
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, c in self.items():
            parts.append(str(s) if c == ONE else f"({scalar_to_text(c)})*{s}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LieElt({self.algebra.value}: {self})"
