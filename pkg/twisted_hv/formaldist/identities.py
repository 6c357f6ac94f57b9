"""Bracket identities between generating functions, checked on finite windows."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import NamedTuple

from sympy import QQ

from ..errors import HVError, unknown_name_message
from ..liealg import AlgebraId, BasisSym, LieElt, bracket, central
from ..scalars import Scalar, scalar
from . import fields
from .delta import delta_coefficient, delta_partner
from .fields import GeneratingFunction
from .window import BiLaurentWindow, WindowBounds

logger = logging.getLogger(__name__)


class UnknownIdentityError(HVError, ValueError):
    """Raised for an identity or field-pair name that is not in the catalogue."""


RANK_ONE_FAMILIES = (
    "ll", "li", "ii",
    "ll-tilde", "li-tilde", "ii-tilde",
    "ll-hat", "li-hat", "ii-hat",
    "ll-bar", "li-bar", "ii-bar",
)  # fmt: skip
RANK_TWO_FAMILIES = ("te-torus", "ee-torus", "te-affine", "ee-affine")
FAMILIES = RANK_ONE_FAMILIES + RANK_TWO_FAMILIES

# catalogue ids, matched case-insensitively
FAMILY_ALIASES = {
    "eq2.7": "ll", "eq2.8": "li", "eq2.9": "ii",
    "eq3.2": "ll-tilde", "eq3.3": "li-tilde", "eq3.4": "ii-tilde",
    "eq3.5": "ll-hat", "eq3.6": "li-hat", "eq3.7": "ii-hat",
    "eq3.11": "ll-bar", "eq3.12": "li-bar", "eq3.13": "ii-bar",
    "eq4.2": "te-torus", "eq4.3": "ee-torus",
    "eq4.5": "te-affine", "eq4.6": "ee-affine",
}  # fmt: skip

_NAME_RE = re.compile(r"^\s*([A-Za-z0-9.-]+)\s*(?:\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))?\s*$")


def canonical_family(name: str) -> str:
    """The family a name or catalogue id refers to; unknown names come back unchanged."""
    key = name.strip().lower()
    return FAMILY_ALIASES.get(key, key)


@dataclass(frozen=True)
class IdentityId:
    """An identity family, with outer indices (m, r) for the rank-two families."""

    family: str
    outer: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise UnknownIdentityError(unknown_name_message("identity", self.family, FAMILIES))
        if self.family in RANK_TWO_FAMILIES and self.outer is None:
            raise UnknownIdentityError(f"{self.family} needs outer indices (m,r)")
        if self.family in RANK_ONE_FAMILIES and self.outer is not None:
            raise UnknownIdentityError(f"{self.family} takes no outer indices")

    @classmethod
    def parse(cls, text: str, outer: tuple[int, int] | None = None) -> IdentityId:
        """Accept "li", "te-torus(1,-1)", "EQ4.2(1,-1)" or a family name plus explicit ``outer``."""
        match = _NAME_RE.match(text)
        if not match:
            raise UnknownIdentityError(unknown_name_message("identity", text, FAMILIES))
        family, m, r = match.groups()
        family = canonical_family(family)
        if m is not None:
            if outer is not None and outer != (int(m), int(r)):
                raise UnknownIdentityError(f"conflicting outer indices for {text!r}: {outer}")
            outer = (int(m), int(r))
        return cls(family, outer)

    @property
    def algebra(self) -> AlgebraId:
        if self.family.endswith("-bar"):
            return AlgebraId.FRAK1
        if self.family.endswith("-torus"):
            return AlgebraId.HV2
        if self.family.endswith("-affine"):
            return AlgebraId.FRAK2HAT
        return AlgebraId.HV1

    def __str__(self) -> str:
        if self.outer is None:
            return self.family
        return f"{self.family}({self.outer[0]},{self.outer[1]})"


@dataclass(frozen=True)
class DeltaTerm:
    """coef * F(x2) * D, or coef * central * D, for a delta derivative D."""

    coef: Scalar
    order: int
    weighted: bool
    field: GeneratingFunction | None = None
    central: BasisSym | None = None

    def coefficient(self, p: int, q: int) -> LieElt | None:
        if not self.coef:
            return None
        partner = delta_partner(self.order, self.weighted, p)
        d = delta_coefficient(self.order, self.weighted, p, partner)
        if not d:
            return None
        if self.field is not None:
            return self.field.coefficient(q - partner).scale(self.coef * d)
        if q != partner:
            return None
        return LieElt.of(self.central, self.coef * d)


@dataclass(frozen=True)
class IdentitySides:
    left: GeneratingFunction
    right: GeneratingFunction
    rhs: tuple[DeltaTerm, ...]


def _q(n, d: int = 1) -> Scalar:
    return scalar(QQ(n, d))


def _rank_one(family: str) -> IdentitySides:
    hv1, frak1 = AlgebraId.HV1, AlgebraId.FRAK1
    pair, variant = (family.split("-") + [""])[:2]
    algebra = frak1 if variant == "bar" else hv1
    c1, c2, c3 = (central(algebra, n) for n in ("C1", "C2", "C3"))
    lf, if_ = {
        "": (fields.field_L(), fields.field_I()),
        "tilde": (fields.field_L_tilde(), fields.field_I_tilde()),
        "hat": (fields.field_L_hat(), fields.field_I_hat()),
        "bar": (fields.field_L_bar(), fields.field_I_bar()),
    }[variant]
    weighted = variant in ("tilde", "hat")

    def shifted(f: GeneratingFunction) -> GeneratingFunction:
        return f.euler() if weighted else f.derivative()

    if pair == "ll":
        terms = [
            DeltaTerm(_q(1), 0, weighted, field=shifted(lf)),
            DeltaTerm(_q(2), 1, weighted, field=lf),
            DeltaTerm(_q(1, 12), 3, weighted, central=c1),
        ]
        if variant == "tilde":
            terms.append(DeltaTerm(_q(-1, 12), 1, weighted, central=c1))
        return IdentitySides(lf, lf, tuple(terms))
    if pair == "li":
        terms = [
            DeltaTerm(_q(1), 0, weighted, field=shifted(if_)),
            DeltaTerm(_q(1), 1, weighted, field=if_),
            DeltaTerm(_q(-1), 2, weighted, central=c2),
        ]
        if variant == "tilde":
            terms.append(DeltaTerm(_q(-1), 1, weighted, central=c2))
        return IdentitySides(lf, if_, tuple(terms))
    return IdentitySides(if_, if_, (DeltaTerm(_q(1), 1, weighted, central=c3),))


def _rank_two(family: str, m: int, r: int) -> IdentitySides:
    pair, variant = family.split("-")
    torus = variant == "torus"
    algebra = AlgebraId.HV2 if torus else AlgebraId.FRAK2HAT
    make_t = fields.field_T_torus if torus else fields.field_T_affine
    make_e = fields.field_E_torus if torus else fields.field_E_affine
    make_left = make_t if pair == "te" else make_e
    left, right, target = make_left(m), make_e(r), make_left(m + r)
    k_lin, k_dep = ("K1", "K2") if pair == "te" else ("K3", "K4")
    on_zero = 1 if m + r == 0 else 0
    weighted = torus
    # torus fields carry x d/dx, affine fields carry d/dx with x1^{-1} delta
    derived = target.euler() if torus else target.derivative()
    terms = (
        DeltaTerm(_q(m + r), 1, weighted, field=target),
        DeltaTerm(_q(m), 0, weighted, field=derived),
        DeltaTerm(_q(m * on_zero), 0, weighted, central=central(algebra, k_lin)),
        DeltaTerm(_q(on_zero), 1, weighted, central=central(algebra, k_dep)),
    )
    return IdentitySides(left, right, terms)


def identity_sides(identity: IdentityId) -> IdentitySides:
    """The two generating functions and the delta expression of an identity."""
    if identity.outer is None:
        return _rank_one(identity.family)
    return _rank_two(identity.family, *identity.outer)


def commutator_table(
    left: GeneratingFunction, right: GeneratingFunction, bounds: WindowBounds
) -> BiLaurentWindow:
    """Coefficients of [A(x1), B(x2)] on the window."""
    return BiLaurentWindow.tabulate(
        bounds, lambda p, q: bracket(left.coefficient(p), right.coefficient(q))
    )


def expand_identity_sides(
    identity: IdentityId, bounds: WindowBounds
) -> tuple[BiLaurentWindow, BiLaurentWindow]:
    """Left side as a bracket double sum, right side as a delta expansion."""
    sides = identity_sides(identity)
    lhs = commutator_table(sides.left, sides.right, bounds)

    def rhs_at(p: int, q: int) -> LieElt | None:
        acc = None
        for term in sides.rhs:
            value = term.coefficient(p, q)
            if value is not None:
                acc = value if acc is None else acc + value
        return acc

    return lhs, BiLaurentWindow.tabulate(bounds, rhs_at)


class Defect(NamedTuple):
    p: int
    q: int
    value: LieElt

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "value": self.value.to_json()}


def verify_identity(identity: IdentityId, bounds: WindowBounds) -> list[Defect]:
    """Nonzero coefficients of lhs - rhs; empty when the identity holds on the window."""
    lhs, rhs = expand_identity_sides(identity, bounds)
    defects = [Defect(p, q, v) for (p, q), v in (lhs - rhs).items()]
    if defects:
        logger.warning(f"{identity}: {len(defects)} defect(s) on {bounds}")
    else:
        logger.debug(f"{identity}: holds on {bounds}")
    return defects
