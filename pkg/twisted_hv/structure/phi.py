"""The anti-linear involution I -> -I, omega -> omega of the vacuum module."""

from __future__ import annotations

import logging

from ..liealg import I
from ..pbwmod import ModuleKind, ModuleSpec, PBWVector
from ..scalars import conj
from ..vertexops import TruncatedModule, state_field
from .conformal import ConformalName, conformal_vector
from .errors import NonVacuumError

logger = logging.getLogger(__name__)


def phi_involution(v: PBWVector) -> PBWVector:
    """(-1)^(number of I factors) on each monomial, coefficients conjugated."""
    if v.spec.kind is not ModuleKind.VACUUM_HV1:
        raise NonVacuumError(f"phi is defined on VacuumHV1, got {v.spec.kind.value}")
    terms = {}
    for mono, c in v.terms.items():
        odd = sum(1 for s in mono if s.name == "I") % 2
        terms[mono] = -conj(c) if odd else conj(c)
    return PBWVector(v.spec, terms)


def phi_automorphism_defect(spec: ModuleSpec, max_degree: int = 3, window: int = 3) -> list[dict]:
    """Entries where phi(u_(n) v) != phi(u)_(n) phi(v) for u in {omega, I}.

    phi only respects the brackets when l1, l3 are real and l2 is purely imaginary.
    """
    module = TruncatedModule(spec)
    heis = PBWVector.monomial(spec, [I(-1)])
    states = {"omega": conformal_vector(ConformalName.OMEGA, spec).value, "I": heis}
    defects = []
    for name, u in states.items():
        field = state_field(u, module)
        image_field = state_field(phi_involution(u), module)
        for v in module.vectors(max_degree):
            phi_v = phi_involution(v)
            for n in range(-window, window + 1):
                diff = phi_involution(field.vertex_mode(n, v)) - image_field.vertex_mode(n, phi_v)
                if diff:
                    defects.append({"u": name, "v": str(v), "n": n, "defect": diff.to_json()["terms"]})
    if defects:
        logger.warning(f"phi fails to commute with modes at {len(defects)} entries")
    return defects
