"""Conformal vectors of the vacuum module and their Virasoro checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from ..errors import unknown_name_message
from ..liealg import I, L
from ..pbwmod import EMPTY, ModuleKind, ModuleSpec, PBWVector, act
from ..scalars import ONE, Scalar, scalar, scalar_to_json
from ..vertexops import TruncatedModule, UntrustedWindowError, state_field
from .errors import NonVacuumError, PreconditionError

logger = logging.getLogger(__name__)


class ConformalName(str, Enum):
    OMEGA = "omega"
    OMEGA_PRIME = "omega_prime"
    OMEGA_H = "omega_H"
    OMEGA_TILDE = "omega_tilde"

    @classmethod
    def parse(cls, text: str) -> ConformalName:
        for name in cls:
            if name.value.lower() == text.strip().lower():
                return name
        raise PreconditionError(unknown_name_message("conformal vector", text, [n.value for n in cls]))


@dataclass(frozen=True)
class ConformalVector:
    name: ConformalName
    value: PBWVector

    @property
    def spec(self) -> ModuleSpec:
        return self.value.spec

    def to_json(self) -> dict:
        return {"name": self.name.value, "value": self.value.to_json()}


def _require_vacuum(spec: ModuleSpec) -> None:
    if spec.kind is not ModuleKind.VACUUM_HV1:
        raise NonVacuumError(f"conformal vectors live in VacuumHV1, got {spec.kind.value}")


def conformal_vector(name: ConformalName | str, spec: ModuleSpec) -> ConformalVector:
    """omega = L(-2)1; omega_prime = I(-1)^2 1 / (2 l3); omega_H = omega_prime + (l2/l3) I(-2)1;
    omega_tilde = omega - omega_H."""
    name = name if isinstance(name, ConformalName) else ConformalName.parse(name)
    _require_vacuum(spec)
    omega = PBWVector(spec, {(L(-2),): ONE})
    if name is ConformalName.OMEGA:
        return ConformalVector(name, omega)
    if not spec.l3:
        raise PreconditionError(f"{name.value} needs l3 != 0")
    prime = PBWVector(spec, {(I(-1), I(-1)): ONE / (2 * spec.l3)})
    if name is ConformalName.OMEGA_PRIME:
        return ConformalVector(name, prime)
    heis = prime + PBWVector(spec, {(I(-2),): spec.l2 / spec.l3})
    if name is ConformalName.OMEGA_H:
        return ConformalVector(name, heis)
    return ConformalVector(name, omega - heis)


def closed_form_central_charge(name: ConformalName | str, spec: ModuleSpec) -> Scalar:
    name = name if isinstance(name, ConformalName) else ConformalName.parse(name)
    if name is ConformalName.OMEGA:
        return spec.l1
    if not spec.l3:
        raise PreconditionError(f"{name.value} needs l3 != 0")
    correction = 12 * spec.l2**2 / spec.l3
    if name is ConformalName.OMEGA_PRIME:
        return ONE
    if name is ConformalName.OMEGA_H:
        return ONE - correction
    return spec.l1 - ONE + correction


def central_charge(v: ConformalVector) -> Scalar:
    """Twice the vacuum coefficient of v_(3) v."""
    module = TruncatedModule(v.spec, max_degree=4, mode_window=3)
    top = state_field(v.value, module).vertex_mode(3, v.value)
    c = 2 * top.coefficient(EMPTY)
    expected = closed_form_central_charge(v.name, v.spec)
    if c != expected:
        logger.warning(f"{v.name.value}: central charge {c} differs from closed form {expected}")
    return c


def virasoro_defect(v: ConformalVector, window: int = 2, max_degree: int = 3) -> list[dict]:
    """Entries where [L_m, L_n] w != (m - n) L_{m+n} w + (m^3 - m)/12 delta_{m+n,0} c w.

    L_n = v_(n+1); m, n range over [-window, window] and w over the basis
    up to ``max_degree``.
    """
    module = TruncatedModule(v.spec)
    if window + 1 > module.mode_window or max_degree > module.max_degree:
        raise UntrustedWindowError(
            f"window {window} / degree {max_degree} exceed the truncation "
            f"({module.mode_window}, {module.max_degree})"
        )
    c = central_charge(v)
    field = state_field(v.value, module)

    def mode(n: int, w: PBWVector) -> PBWVector:
        return field.vertex_mode(n + 1, w)

    defects = []
    for w in module.vectors(max_degree):
        for m in range(-window, window + 1):
            for n in range(-window, window + 1):
                lhs = mode(m, mode(n, w)) - mode(n, mode(m, w))
                rhs = mode(m + n, w).scale(scalar(m - n))
                if m + n == 0:
                    rhs = rhs + w.scale(c * (m**3 - m) / 12)
                diff = lhs - rhs
                if diff:
                    defects.append(
                        {"m": m, "n": n, "input": w.to_json()["terms"], "defect": diff.to_json()["terms"]}
                    )
    if defects:
        logger.warning(f"{v.name.value}: Virasoro relations fail at {len(defects)} entries")
    return defects


def commutant_defect(spec: ModuleSpec, window: int = 3, max_degree: int = 0) -> list[dict]:
    """Entries where omega_tilde_(n) I(m) w != I(m) omega_tilde_(n) w."""
    tilde = conformal_vector(ConformalName.OMEGA_TILDE, spec)
    field = state_field(tilde.value, TruncatedModule(spec))
    defects = []
    for w in TruncatedModule(spec).vectors(max_degree):
        for n in range(-window, window + 1):
            for m in range(-window, window + 1):
                diff = field.vertex_mode(n, act(I(m), w)) - act(I(m), field.vertex_mode(n, w))
                if diff:
                    defects.append(
                        {"n": n, "m": m, "input": w.to_json()["terms"], "defect": diff.to_json()["terms"]}
                    )
    if defects:
        logger.warning(f"omega_tilde fails to commute with I at {len(defects)} entries")
    return defects


def omega_prime_l1(spec: ModuleSpec) -> PBWVector:
    """L(1) omega_prime, equal to -(2 l2 / l3) I(-1)1."""
    return act(L(1), conformal_vector(ConformalName.OMEGA_PRIME, spec).value)


def central_charge_report(v: ConformalVector) -> dict:
    c = central_charge(v)
    return {
        "name": v.name.value,
        "central_charge": scalar_to_json(c),
        "closed_form": scalar_to_json(closed_form_central_charge(v.name, v.spec)),
    }
