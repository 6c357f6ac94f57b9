"""Virasoro singular vectors at the central charges c_{p,q}."""

from __future__ import annotations

import logging
from math import gcd

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..liealg import L
from ..pbwmod import ModuleKind, ModuleSpec, PBWVector, act, enumerate_basis
from ..scalars import ScalarLike, parse_scalar, scalar
from ..vertexops import TruncatedModule, state_field
from .conformal import ConformalName, closed_form_central_charge, conformal_vector
from .errors import PreconditionError

logger = logging.getLogger(__name__)


def _check_pq(p: int, q: int) -> None:
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise PreconditionError(f"c_(p,q) needs coprime p, q >= 2, got ({p}, {q})")


def cpq(p: int, q: int):
    """c_{p,q} = 1 - 6 (p - q)^2 / (p q)."""
    _check_pq(p, q)
    return scalar(1) - scalar(6 * (p - q) ** 2) / (p * q)


def cpq_degree(p: int, q: int) -> int:
    _check_pq(p, q)
    return (p - 1) * (q - 1)


def _coordinates(v: PBWVector, basis: tuple) -> list:
    return [v.coefficient(m) for m in basis]


def singular_vector_search(c: ScalarLike, degree: int) -> list[PBWVector]:
    """Basis of the vectors of ``degree`` in the Virasoro vacuum module of central charge c
    killed by L(1) and L(2)."""
    if degree < 1:
        raise PreconditionError(f"singular vectors are searched from degree 1, got {degree}")
    spec = ModuleSpec(ModuleKind.VACUUM_VIR, l1=parse_scalar(c))
    basis = enumerate_basis(spec, degree)
    if not basis:
        return []
    rows: list[list] = []
    for n in (1, 2):
        if degree - n < 0:
            continue
        target = enumerate_basis(spec, degree - n)
        columns = [_coordinates(act(L(n), PBWVector(spec, {m: scalar(1)})), target) for m in basis]
        rows.extend([col[i] for col in columns] for i in range(len(target)))
    if not rows:
        return [PBWVector(spec, {m: scalar(1)}) for m in basis]
    kernel = DomainMatrix(rows, (len(rows), len(basis)), QQ_I).nullspace(divide_last=True)
    out = [PBWVector(spec, dict(zip(basis, row))) for row in kernel.to_list()]
    logger.info(f"c = {spec.l1}, degree {degree}: kernel dimension {len(out)}")
    return out


def embed_via_omega_tilde(v: PBWVector, spec: ModuleSpec) -> tuple[PBWVector, bool]:
    """Image of a Virasoro vacuum vector under L(-n) -> omega_tilde_(-n+1) in VacuumHV1,
    and whether omega_tilde_(2) and omega_tilde_(3) kill it."""
    if v.spec.kind is not ModuleKind.VACUUM_VIR:
        raise PreconditionError(f"expected a VacuumVir vector, got {v.spec.kind.value}")
    c_tilde = closed_form_central_charge(ConformalName.OMEGA_TILDE, spec)
    if c_tilde != v.spec.l1:
        raise PreconditionError(f"omega_tilde has central charge {c_tilde}, vector has {v.spec.l1}")
    tilde = conformal_vector(ConformalName.OMEGA_TILDE, spec)
    field = state_field(tilde.value, TruncatedModule(spec))
    image = PBWVector.zero(spec)
    for mono, coef in v.terms.items():
        w = PBWVector.vacuum(spec)
        for s in reversed(mono):
            (n,) = s.idx
            w = field.vertex_mode(n + 1, w)
        image = image + w.scale(coef)
    annihilated = not field.vertex_mode(2, image) and not field.vertex_mode(3, image)
    if not annihilated:
        logger.warning("embedded vector is not annihilated by the positive omega_tilde modes")
    return image, annihilated
