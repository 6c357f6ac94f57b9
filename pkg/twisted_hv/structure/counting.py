"""Graded-dimension checks: the tensor-product decomposition and V/C_2(V)."""

from __future__ import annotations

import logging

from sympy import QQ_I, npartitions
from sympy.polys.matrices import DomainMatrix

from ..pbwmod import ModuleKind, ModuleSpec, enumerate_basis, graded_dim
from ..vertexops import TruncatedModule, state_field
from .errors import NonVacuumError, PreconditionError

logger = logging.getLogger(__name__)


def tensor_dim_check(spec: ModuleSpec, max_degree: int) -> list[dict]:
    """Degrees where dim V_n differs from sum_k p(k) dim Vir_{n-k}.

    p(k) counts the Heisenberg Fock space and Vir is the Virasoro vacuum
    module; an empty list means the graded dimensions match.
    """
    if spec.kind is not ModuleKind.VACUUM_HV1:
        raise NonVacuumError(f"tensor decomposition is stated for VacuumHV1, got {spec.kind.value}")
    if not spec.l3:
        raise PreconditionError("tensor decomposition needs l3 != 0")
    vir = ModuleSpec(ModuleKind.VACUUM_VIR, l1=spec.l1)
    defects = []
    for n in range(max_degree + 1):
        expected = sum(int(npartitions(k)) * graded_dim(vir, n - k) for k in range(n + 1))
        actual = graded_dim(spec, n)
        if actual != expected:
            defects.append({"degree": n, "actual": actual, "expected": expected})
    if defects:
        logger.warning(f"graded dimensions disagree at degrees {[d['degree'] for d in defects]}")
    return defects


def c2_quotient_dim(spec: ModuleSpec, degree: int) -> int:
    """dim of the degree piece of V/C_2(V), C_2(V) spanned by u_(-2) v with deg u >= 1."""
    if spec.kind is not ModuleKind.VACUUM_HV1:
        raise NonVacuumError(f"C_2 quotient is computed on VacuumHV1, got {spec.kind.value}")
    if degree < 0:
        raise PreconditionError(f"degree must be >= 0, got {degree}")
    basis = enumerate_basis(spec, degree)
    module = TruncatedModule(spec, max_degree=max(degree, 1))
    rows = []
    # u_(-2) v has degree deg u + deg v + 1
    for du in range(1, degree):
        dv = degree - du - 1
        for u in module.basis(du):
            field = state_field(u, module)
            for v in module.basis(dv):
                image = field.vertex_mode(-2, v)
                if image:
                    rows.append([image.coefficient(m) for m in basis])
    rank = DomainMatrix(rows, (len(rows), len(basis)), QQ_I).rank() if rows else 0
    logger.debug(f"degree {degree}: dim {len(basis)}, C_2 rank {rank}")
    return len(basis) - rank
