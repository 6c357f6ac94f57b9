"""Fields on truncated modules: coefficient operators built from straightening."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Callable, Iterator

from sympy import QQ

from ..config import settings
from ..errors import HVError, unknown_name_message
from ..liealg import AlgebraId, BasisSym, central
from ..pbwmod import (
    ModuleKind,
    ModuleMismatchError,
    ModuleSpec,
    PBWVector,
    act,
    enumerate_basis,
    monomial_degree,
)
from ..scalars import ONE, Scalar, binom, scalar

logger = logging.getLogger(__name__)

Coefficient = Callable[[int, PBWVector], PBWVector]


class UntrustedWindowError(HVError):
    """Raised when a requested mode or vector lies outside the truncation window."""


@dataclass(frozen=True)
class TruncatedModule:
    """A module with the degree cap and mode window inside which results are trusted."""

    spec: ModuleSpec
    max_degree: int = field(default_factory=lambda: settings.MODULE_DEGREE)
    mode_window: int = field(default_factory=lambda: settings.MODE_WINDOW)

    def basis(self, degree: int) -> list[PBWVector]:
        return [PBWVector(self.spec, {m: ONE}) for m in enumerate_basis(self.spec, degree)]

    def vectors(self, max_degree: int | None = None) -> Iterator[PBWVector]:
        top = self.max_degree if max_degree is None else min(max_degree, self.max_degree)
        for d in range(top + 1):
            yield from self.basis(d)

    def generating_vector(self) -> PBWVector:
        return PBWVector.vacuum(self.spec)


def split_by_degree(w: PBWVector) -> dict[int, PBWVector]:
    parts: dict[int, dict] = {}
    for m, c in w.terms.items():
        parts.setdefault(monomial_degree(w.spec, m), {})[m] = c
    return {d: PBWVector(w.spec, terms) for d, terms in parts.items()}


class TruncatedField:
    """A field sum_p F_p x^p acting on a graded module.

    ``offset`` is the degree change of F_p minus p, so F_p maps degree d to
    degree d + p + offset; for a vertex operator of weight wt it equals wt.
    ``weight_shift`` fixes the conventional mode numbering mode(n) = F_{-n-weight_shift}.
    """

    def __init__(
        self,
        name: str,
        module: TruncatedModule,
        coefficient: Coefficient,
        offset: int,
        weight_shift: int = 1,
    ):
        self.name = name
        self.module = module
        self.offset = offset
        self.weight_shift = weight_shift
        self._coefficient = coefficient
        self._cache: dict[tuple[int, tuple], PBWVector] = {}

    def __repr__(self) -> str:
        return f"TruncatedField({self.name}, offset={self.offset})"

    def lowest_power(self, degree: int) -> int:
        """Smallest p with F_p possibly nonzero on degree ``degree``."""
        return -degree - self.offset

    def coefficient(self, p: int, w: PBWVector) -> PBWVector:
        """F_p w, exact; no window checks."""
        spec = self.module.spec
        out = PBWVector.zero(spec)
        for m, c in w.terms.items():
            if monomial_degree(spec, m) + p + self.offset < 0:
                continue
            key = (p, m)
            value = self._cache.get(key)
            if value is None:
                value = self._coefficient(p, PBWVector(spec, {m: ONE}))
                self._cache[key] = value
            out = out + value.scale(c)
        return out

    def vertex_mode(self, j: int, w: PBWVector) -> PBWVector:
        """Coefficient of x^{-j-1}."""
        return self.coefficient(-j - 1, w)

    def mode(self, n: int, w: PBWVector) -> PBWVector:
        return self.coefficient(-n - self.weight_shift, w)

    def check_trusted(self, p: int, w: PBWVector) -> None:
        module = self.module
        n = -p - self.weight_shift
        if abs(n) > module.mode_window:
            raise UntrustedWindowError(
                f"{self.name}: mode {n} outside window [-{module.mode_window}, {module.mode_window}]"
            )
        top = w.max_degree()
        if top > module.max_degree or top + p + self.offset > module.max_degree:
            raise UntrustedWindowError(
                f"{self.name}: degree {top} -> {top + p + self.offset} exceeds truncation {module.max_degree}"
            )

    def evaluate(self, p: int, w: PBWVector) -> PBWVector:
        """F_p w after checking the truncation window."""
        self.check_trusted(p, w)
        return self.coefficient(p, w)

    def mode_table(self, modes: range, vectors: list[PBWVector]) -> list[dict]:
        rows = []
        for n in modes:
            for w in vectors:
                value = self.evaluate(-n - self.weight_shift, w)
                if value:
                    rows.append({"mode": n, "input": w.to_json()["terms"], "output": value.to_json()["terms"]})
        return rows

    def agrees_with(self, other: TruncatedField, powers: range, vectors: list[PBWVector]) -> bool:
        return all(self.coefficient(p, w) == other.coefficient(p, w) for p in powers for w in vectors)


def identity_field(module: TruncatedModule) -> TruncatedField:
    def coefficient(p: int, w: PBWVector) -> PBWVector:
        return w if p == 0 else PBWVector.zero(w.spec)

    return TruncatedField("1", module, coefficient, offset=0, weight_shift=0)


def scaled_identity(module: TruncatedModule, c: Scalar) -> TruncatedField:
    def coefficient(p: int, w: PBWVector) -> PBWVector:
        return w.scale(c) if p == 0 else PBWVector.zero(w.spec)

    return TruncatedField(f"{c}*1", module, coefficient, offset=0, weight_shift=0)


def linear_combination(
    name: str, module: TruncatedModule, parts: list[tuple[TruncatedField, Scalar]]
) -> TruncatedField:
    """sum c_i F_i for fields of the same offset."""
    offsets = {f.offset for f, _ in parts}
    if len(offsets) > 1:
        raise ModuleMismatchError(f"cannot add fields with offsets {sorted(offsets)}")
    offset = offsets.pop() if offsets else 0
    shift = parts[0][0].weight_shift if parts else 1

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        out = PBWVector.zero(w.spec)
        for f, c in parts:
            out = out + f.coefficient(p, w).scale(c)
        return out

    return TruncatedField(name, module, coefficient, offset=offset, weight_shift=shift)


def derivative_field(f: TruncatedField, k: int = 1) -> TruncatedField:
    """(d/dx)^k F / k!: the x^p coefficient is binom(p+k, k) F_{p+k}."""

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        c = binom(p + k, k)
        return f.coefficient(p + k, w).scale(scalar(c)) if c else PBWVector.zero(w.spec)

    return TruncatedField(f"d^{k}({f.name})", f.module, coefficient, f.offset + k, f.weight_shift + k)


def euler_field(f: TruncatedField) -> TruncatedField:
    """x d/dx F."""

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        return f.coefficient(p, w).scale(scalar(p)) if p else PBWVector.zero(w.spec)

    return TruncatedField(f"xd({f.name})", f.module, coefficient, f.offset, f.weight_shift)


@dataclass(frozen=True)
class _Generator:
    algebra: AlgebraId
    symbol: str
    # mode index of the symbol multiplying x^p
    index: Callable[[int], int]
    offset: int
    weight_shift: int
    # central shift of the x^0 coefficient: (central symbol, factor)
    shift: tuple[str, Scalar] | None = None


_GENERATORS: dict[str, _Generator] = {
    "L": _Generator(AlgebraId.HV1, "L", lambda p: -p - 2, 2, 2),
    "I": _Generator(AlgebraId.HV1, "I", lambda p: -p - 1, 1, 1),
    "Ltilde": _Generator(AlgebraId.HV1, "L", lambda p: -p, 0, 0),
    "Itilde": _Generator(AlgebraId.HV1, "I", lambda p: -p, 0, 0),
    "Lhat": _Generator(AlgebraId.HV1, "L", lambda p: -p, 0, 0, ("C1", scalar(QQ(-1, 24)))),
    "Ihat": _Generator(AlgebraId.HV1, "I", lambda p: -p, 0, 0, ("C2", scalar(-1))),
    "Lbar": _Generator(AlgebraId.FRAK1, "Lbar", lambda p: -p - 1, 2, 1),
    "Ibar": _Generator(AlgebraId.FRAK1, "Ibar", lambda p: -p - 1, 1, 1),
}

# outer-indexed fields: name -> (algebra, symbol, module kind, x^p mode, offset)
_OUTER: dict[str, tuple[AlgebraId, str, ModuleKind, Callable[[int], int], int]] = {
    "T": (AlgebraId.HV2, "T", ModuleKind.INDUCED_HV2, lambda p: -p, 0),
    "E": (AlgebraId.HV2, "E", ModuleKind.INDUCED_HV2, lambda p: -p, 0),
    "That": (AlgebraId.FRAK2HAT, "That", ModuleKind.VACUUM_FRAK2HAT, lambda p: -p - 1, 1),
    "Ehat": (AlgebraId.FRAK2HAT, "Ehat", ModuleKind.VACUUM_FRAK2HAT, lambda p: -p - 1, 1),
}

_WHICH_RE = re.compile(r"^\s*([A-Za-z]+)\s*(?:\(\s*(-?\d+)\s*\))?\s*$")

GENERATOR_NAMES = (*_GENERATORS, "T(m)", "E(m)", "That(m)", "Ehat(m)")


def generator_field(which: str, module: TruncatedModule) -> TruncatedField:
    """Field of a generating function acting on ``module`` through straightening."""
    spec = module.spec
    match = _WHICH_RE.match(which)
    if not match:
        raise ModuleMismatchError(unknown_name_message("generator field", which, GENERATOR_NAMES))
    name, outer = match.group(1), match.group(2)

    if name in _OUTER:
        algebra, symbol, kind, index, offset = _OUTER[name]
        if outer is None:
            raise ModuleMismatchError(f"{name} field needs an outer index, e.g. {name}(1)")
        if spec.kind is not kind:
            raise ModuleMismatchError(f"{which} acts on {kind.value}, not {spec.kind.value}")
        m = int(outer)

        def outer_coefficient(p: int, w: PBWVector) -> PBWVector:
            n = index(p)
            if algebra is AlgebraId.HV2 and (m, n) == (0, 0):
                return PBWVector.zero(w.spec)
            return act(BasisSym(algebra, symbol, (m, n)), w)

        return TruncatedField(f"{name}_{m}", module, outer_coefficient, offset=offset, weight_shift=offset)

    gen = _GENERATORS.get(name)
    if gen is None or outer is not None:
        raise ModuleMismatchError(unknown_name_message("generator field", which, GENERATOR_NAMES))
    if gen.algebra is not spec.algebra:
        raise ModuleMismatchError(
            f"{which} is a field of {gen.algebra.value}, module {spec.kind.value} is over {spec.algebra.value}"
        )
    if spec.kind is ModuleKind.VACUUM_VIR and gen.symbol != "L":
        raise ModuleMismatchError(f"{which} does not act on the Virasoro sector")
    shift = None
    if gen.shift is not None:
        shift = gen.shift[1] * spec.central_value(central(gen.algebra, gen.shift[0]))

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        out = act(BasisSym(gen.algebra, gen.symbol, (gen.index(p),)), w)
        if shift and p == 0:
            out = out + w.scale(shift)
        return out

    return TruncatedField(which, module, coefficient, offset=gen.offset, weight_shift=gen.weight_shift)
