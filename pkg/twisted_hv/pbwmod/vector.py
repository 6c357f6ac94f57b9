"""PBW monomials and sparse module vectors."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from ..liealg import BasisSym
from ..scalars import ONE, ZERO, Scalar, scalar_from_json, scalar_to_json, scalar_to_text
from .spec import ModuleMismatchError, ModuleSpec

Monomial = tuple[BasisSym, ...]

EMPTY: Monomial = ()


def monomial_degree(spec: ModuleSpec, mono: Monomial) -> int:
    return sum(spec.symbol_degree(s) for s in mono)


def is_canonical(spec: ModuleSpec, mono: Monomial) -> bool:
    keys = [spec.position(s) for s in mono]
    return all(spec.is_creation(s) for s in mono) and keys == sorted(keys)


def monomial_to_text(mono: Monomial) -> str:
    return "*".join([*(str(s) for s in mono), "1"])


class PBWVector:
    """Finite combination of canonical PBW monomials applied to the generating vector."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: ModuleSpec, terms: Mapping[Monomial, Scalar] | None = None):
        self.spec = spec
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def vacuum(cls, spec: ModuleSpec) -> PBWVector:
        """The vacuum or highest-weight vector."""
        return cls(spec, {EMPTY: ONE})

    @classmethod
    def zero(cls, spec: ModuleSpec) -> PBWVector:
        return cls(spec)

    @classmethod
    def monomial(cls, spec: ModuleSpec, mono: Iterable[BasisSym], coef: Scalar = ONE) -> PBWVector:
        mono = tuple(mono)
        if not is_canonical(spec, mono):
            raise ModuleMismatchError(
                f"{monomial_to_text(mono)} is not a canonical monomial of {spec.kind.value}"
            )
        return cls(spec, {mono: coef})

    @classmethod
    def combine(cls, spec: ModuleSpec, pairs: Iterable[tuple[Monomial, Scalar]]) -> PBWVector:
        acc: dict[Monomial, Scalar] = {}
        for m, c in pairs:
            acc[m] = acc[m] + c if m in acc else c
        return cls(spec, acc)

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Scalar]]:
        """Terms ordered by degree, then by canonical position of the factors."""
        spec = self.spec
        return sorted(
            self._terms.items(),
            key=lambda kv: (monomial_degree(spec, kv[0]), [spec.position(s) for s in kv[0]]),
        )

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {monomial_degree(self.spec, m) for m in self._terms}

    def max_degree(self) -> int:
        """Largest degree present; 0 for the zero vector."""
        return max(self.degrees(), default=0)

    def homogeneous(self, degree: int) -> PBWVector:
        spec = self.spec
        return PBWVector(
            spec, {m: c for m, c in self._terms.items() if monomial_degree(spec, m) == degree}
        )

    def _check(self, other: PBWVector) -> None:
        if other.spec != self.spec:
            raise ModuleMismatchError(
                f"cannot combine vectors of {self.spec.kind.value} and {other.spec.kind.value}"
            )

    def __add__(self, other: PBWVector) -> PBWVector:
        self._check(other)
        return PBWVector.combine(self.spec, [*self._terms.items(), *other._terms.items()])

    def __sub__(self, other: PBWVector) -> PBWVector:
        return self + (-other)

    def __neg__(self) -> PBWVector:
        return PBWVector(self.spec, {m: -c for m, c in self._terms.items()})

    def scale(self, c: Scalar) -> PBWVector:
        return PBWVector(self.spec, {m: c * v for m, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWVector):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.spec, frozenset(self._terms.items())))

    def to_json(self) -> dict:
        return {
            "module": self.spec.to_json(),
            "terms": [
                {"monomial": [s.to_json() for s in m], "coef": scalar_to_json(c)}
                for m, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> PBWVector:
        spec = ModuleSpec.from_json(data["module"])
        alg = spec.algebra
        pairs = []
        for t in data.get("terms", []):
            mono = tuple(BasisSym(alg, f["sym"], tuple(f.get("idx", ()))) for f in t["monomial"])
            if not is_canonical(spec, mono):
                raise ModuleMismatchError(f"non-canonical monomial {monomial_to_text(mono)}")
            pairs.append((mono, scalar_from_json(t["coef"])))
        return cls.combine(spec, pairs)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            text = monomial_to_text(m)
            parts.append(text if c == ONE else f"({scalar_to_text(c)})*{text}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PBWVector({self.spec.kind.value}: {self})"
