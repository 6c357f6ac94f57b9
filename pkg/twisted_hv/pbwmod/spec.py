"""Module kinds, their parameters and their creation alphabets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..errors import HVError, unknown_name_message
from ..liealg import SYMBOL_NAMES, AlgebraId, BasisSym
from ..scalars import ZERO, Scalar, ScalarLike, parse_scalar, scalar_from_json, scalar_to_json


class ModuleMismatchError(HVError, ValueError):
    """Raised when a symbol or vector does not belong to the module it is used with."""


class StraighteningError(HVError):
    """Raised when straightening exceeds the recursion limit."""


class MissingBoundError(HVError, ValueError):
    """Raised when a rank-two basis is enumerated without an m bound."""


class ModuleKind(str, Enum):
    VACUUM_HV1 = "VacuumHV1"
    VERMA_HV1 = "VermaHV1"
    VACUUM_FRAK1 = "VacuumFRAK1"
    VACUUM_FRAK2HAT = "VacuumFRAK2HAT"
    VACUUM_VIR = "VacuumVir"  # L-only sector of VacuumHV1
    INDUCED_HV2 = "InducedHV2"  # restricted hv2-module induced from depth >= 1

    @classmethod
    def parse(cls, text: str) -> ModuleKind:
        for kind in cls:
            if kind.value.lower() == text.strip().lower():
                return kind
        raise ModuleMismatchError(unknown_name_message("module", text, [k.value for k in cls]))


_ALGEBRA = {
    ModuleKind.VACUUM_HV1: AlgebraId.HV1,
    ModuleKind.VERMA_HV1: AlgebraId.HV1,
    ModuleKind.VACUUM_VIR: AlgebraId.HV1,
    ModuleKind.VACUUM_FRAK1: AlgebraId.FRAK1,
    ModuleKind.VACUUM_FRAK2HAT: AlgebraId.FRAK2HAT,
    ModuleKind.INDUCED_HV2: AlgebraId.HV2,
}

# central symbol -> parameter attribute
_CENTRAL_PARAM = {
    "C1": "l1", "C2": "l2", "C3": "l3",
    "K1": "l1", "K2": "l2", "K3": "l3", "K4": "l4",
}  # fmt: skip

# heisenberg-type block first, then the virasoro-type block
_BLOCK = {"I": 0, "L": 1, "Ibar": 0, "Lbar": 1, "T": 0, "E": 1, "That": 0, "Ehat": 1}

RANK_TWO_KINDS = (ModuleKind.VACUUM_FRAK2HAT, ModuleKind.INDUCED_HV2)


@dataclass(frozen=True)
class ModuleSpec:
    """A module kind together with its central charges and highest weights."""

    kind: ModuleKind
    l1: Scalar = ZERO
    l2: Scalar = ZERO
    l3: Scalar = ZERO
    l4: Scalar = ZERO
    h1: Scalar = ZERO
    h2: Scalar = ZERO
    m_bound: int | None = None

    def __post_init__(self) -> None:
        if self.kind is not ModuleKind.VERMA_HV1 and (self.h1 or self.h2):
            raise ModuleMismatchError(f"highest weights h1, h2 only apply to VermaHV1, not {self.kind.value}")
        if self.kind not in RANK_TWO_KINDS and self.l4:
            raise ModuleMismatchError(f"l4 only applies to rank-two modules, not {self.kind.value}")
        if self.m_bound is not None and self.m_bound < 0:
            raise ModuleMismatchError(f"m_bound must be >= 0, got {self.m_bound}")

    @classmethod
    def build(
        cls,
        kind: ModuleKind | str,
        m_bound: int | None = None,
        **params: ScalarLike,
    ) -> ModuleSpec:
        """Construct from loosely typed values such as "1/2" or 3."""
        kind = kind if isinstance(kind, ModuleKind) else ModuleKind.parse(kind)
        unknown = set(params) - {"l1", "l2", "l3", "l4", "h1", "h2"}
        if unknown:
            raise ModuleMismatchError(f"unknown module parameters: {sorted(unknown)}")
        values = {k: parse_scalar(v) for k, v in params.items() if v is not None}
        return cls(kind, m_bound=m_bound, **values)

    @property
    def algebra(self) -> AlgebraId:
        return _ALGEBRA[self.kind]

    @property
    def is_vacuum(self) -> bool:
        return self.kind is not ModuleKind.VERMA_HV1 and self.kind is not ModuleKind.INDUCED_HV2

    def central_value(self, s: BasisSym) -> Scalar:
        return getattr(self, _CENTRAL_PARAM[s.name])

    def check_symbol(self, s: BasisSym) -> None:
        if s.algebra is not self.algebra:
            raise ModuleMismatchError(
                f"{s} belongs to {s.algebra.value}, module {self.kind.value} is over {self.algebra.value}"
            )
        if self.kind is ModuleKind.VACUUM_VIR and s.name in ("I", "C2", "C3"):
            raise ModuleMismatchError(f"{s} does not act on the Virasoro sector")

    def depth(self, s: BasisSym) -> int:
        """Minus the mode index that carries the grading."""
        return -s.idx[-1]

    def is_creation(self, s: BasisSym) -> bool:
        if s.is_central:
            return False
        depth = self.depth(s)
        if self.kind is ModuleKind.VACUUM_HV1 or self.kind is ModuleKind.VACUUM_VIR:
            return depth >= (2 if s.name == "L" else 1)
        if self.kind is ModuleKind.INDUCED_HV2:
            return depth >= 0
        return depth >= 1

    def symbol_degree(self, s: BasisSym) -> int:
        """Degree added by a creation symbol, or minus the shift of any mode."""
        if s.name == "Lbar":
            return self.depth(s) + 1
        return self.depth(s)

    def position(self, s: BasisSym) -> tuple[int, ...]:
        """Canonical sort key: block, then decreasing depth, then the outer index."""
        block = _BLOCK[s.name]
        if len(s.idx) == 2:
            return (block, -self.depth(s), s.idx[0])
        return (block, -self.depth(s))

    def creation_symbols(self, max_degree: int) -> list[BasisSym]:
        """All creation symbols of degree <= max_degree, in canonical order."""
        if self.kind is ModuleKind.INDUCED_HV2:
            raise ModuleMismatchError("InducedHV2 has infinitely many creation symbols per degree")
        alg = self.algebra
        out: list[BasisSym] = []
        if self.kind in RANK_TWO_KINDS:
            if self.m_bound is None:
                raise MissingBoundError(f"{self.kind.value} needs m_bound to enumerate a basis")
            names = ("That", "Ehat")
            for name in names:
                for depth in range(1, max_degree + 1):
                    for m in range(-self.m_bound, self.m_bound + 1):
                        out.append(BasisSym(alg, name, (m, -depth)))
        else:
            for name in ("I", "L", "Ibar", "Lbar"):
                if name not in SYMBOL_NAMES[alg]:
                    continue
                if self.kind is ModuleKind.VACUUM_VIR and name == "I":
                    continue
                for depth in range(1, max_degree + 1):
                    s = BasisSym(alg, name, (-depth,))
                    if self.is_creation(s) and self.symbol_degree(s) <= max_degree:
                        out.append(s)
        return sorted(out, key=self.position)

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind.value}
        for name in ("l1", "l2", "l3", "l4", "h1", "h2"):
            value = getattr(self, name)
            if value:
                data[name] = scalar_to_json(value)
        if self.m_bound is not None:
            data["m_bound"] = self.m_bound
        return data

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> ModuleSpec:
        params = {
            k: scalar_from_json(v) for k, v in data.items() if k in ("l1", "l2", "l3", "l4", "h1", "h2")
        }
        return cls(ModuleKind.parse(data["kind"]), m_bound=data.get("m_bound"), **params)
