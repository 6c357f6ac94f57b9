"""Contravariant forms: Gram matrices by sigma-transfer, ranks and exact positivity."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..liealg import BasisSym, LieElt, sigma
from ..pbwmod import (
    EMPTY,
    Monomial,
    ModuleKind,
    ModuleMismatchError,
    ModuleSpec,
    PBWVector,
    act,
    act_element,
    enumerate_basis,
    monomial_to_text,
)
from ..scalars import ONE, ZERO, Scalar, conj, is_real, scalar_to_json
from .errors import AsymmetricGramError, PreconditionError

logger = logging.getLogger(__name__)

_FORM_KINDS = (ModuleKind.VERMA_HV1, ModuleKind.VACUUM_HV1, ModuleKind.VACUUM_VIR)


class Positivity(str, Enum):
    DEFINITE = "definite"
    SEMIDEFINITE = "semidefinite"
    NOT_POSITIVE = "not positive"


@dataclass(frozen=True)
class GramMatrix:
    """Entries (b_i hw, b_j hw) over the canonical basis of one degree."""

    spec: ModuleSpec
    degree: int
    basis: tuple[Monomial, ...]
    entries: tuple[tuple[Scalar, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], (self.size, self.size), QQ_I)

    def rank(self) -> int:
        if not self.size:
            return 0
        return self.to_domain_matrix().rank()

    def determinant(self) -> Scalar:
        if not self.size:
            return ONE
        return self.to_domain_matrix().det()

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def is_hermitian(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == conj(self.entries[j][i]) for i in range(n) for j in range(i + 1))

    def to_json(self) -> dict:
        return {
            "module": self.spec.to_json(),
            "degree": self.degree,
            "basis": [monomial_to_text(m) for m in self.basis],
            "entries": [[scalar_to_json(c) for c in row] for row in self.entries],
        }


def _sigma_of(s: BasisSym) -> LieElt:
    return sigma(LieElt.of(s))


def _transfer(mono: Monomial, v: PBWVector) -> PBWVector:
    """sigma(x_r) ... sigma(x_1) v for mono = x_1 ... x_r, so (mono hw, v) = (hw, result)."""
    for s in mono:
        v = act_element(_sigma_of(s), v)
    return v


def _check_form_spec(spec: ModuleSpec) -> None:
    if spec.kind not in _FORM_KINDS:
        raise ModuleMismatchError(f"contravariant form is defined on hv1 modules, got {spec.kind.value}")


@lru_cache(maxsize=256)
def gram_matrix(spec: ModuleSpec, degree: int) -> GramMatrix:
    """Gram matrix of the contravariant form, normalized by (hw, hw) = 1.

    Entry (i, j) moves basis_i across the form through sigma and reads off
    the hw-coefficient; Hermitian symmetry is not assumed.
    """
    _check_form_spec(spec)
    basis = enumerate_basis(spec, degree)
    rows = []
    for left in basis:
        row = []
        for right in basis:
            image = _transfer(left, PBWVector(spec, {right: ONE}))
            row.append(conj(image.coefficient(EMPTY)))
        rows.append(tuple(row))
    logger.debug(f"gram {spec.kind.value} degree {degree}: {len(basis)}x{len(basis)}")
    return GramMatrix(spec, degree, basis, tuple(rows))


def gram_rank(spec: ModuleSpec, degree: int) -> int:
    """Rank of the form in one degree: the graded dimension of the simple quotient."""
    return gram_matrix(spec, degree).rank()


def form(u: PBWVector, v: PBWVector) -> Scalar:
    """(u, v): linear in u, conjugate-linear in v; pieces of different degree are orthogonal."""
    if u.spec != v.spec:
        raise ModuleMismatchError("form arguments belong to different modules")
    out = ZERO
    for d in u.degrees() & v.degrees():
        gram = gram_matrix(u.spec, d)
        index = {m: i for i, m in enumerate(gram.basis)}
        for mu, cu in u.homogeneous(d).terms.items():
            for mv, cv in v.homogeneous(d).terms.items():
                out = out + cu * conj(cv) * gram.entries[index[mu]][index[mv]]
    return out


def contravariance_defect(spec: ModuleSpec, degree: int, window: int = 2) -> list[dict]:
    """Entries where (x u, v) != (u, sigma(x) v) for x = L(n), I(n), |n| <= window."""
    _check_form_spec(spec)
    names = ("L",) if spec.kind is ModuleKind.VACUUM_VIR else ("L", "I")
    defects = []
    for name in names:
        for n in range(-window, window + 1):
            x = BasisSym(spec.algebra, name, (n,))
            if degree - n < 0:
                continue
            for u_mono in enumerate_basis(spec, degree):
                u = PBWVector(spec, {u_mono: ONE})
                for v_mono in enumerate_basis(spec, degree - n):
                    v = PBWVector(spec, {v_mono: ONE})
                    lhs = form(act(x, u), v)
                    rhs = form(u, act_element(_sigma_of(x), v))
                    if lhs != rhs:
                        defects.append(
                            {
                                "x": str(x),
                                "u": monomial_to_text(u_mono),
                                "v": monomial_to_text(v_mono),
                                "lhs": scalar_to_json(lhs),
                                "rhs": scalar_to_json(rhs),
                            }
                        )
    if defects:
        logger.warning(f"contravariance fails at {len(defects)} entries")
    return defects


def classify_symmetric(rows: list[list]) -> Positivity:
    """Exact positivity of a real symmetric matrix by symmetric elimination.

    Pivots on a positive diagonal entry and recurses on the Schur complement;
    a negative diagonal, or a zero diagonal block with a nonzero entry, means
    the form is not positive.
    """
    a = [list(row) for row in rows]
    active = list(range(len(a)))
    while active:
        pivot = next((i for i in active if a[i][i] > 0), None)
        if pivot is None:
            if any(a[i][i] < 0 for i in active) or any(a[i][j] for i in active for j in active):
                return Positivity.NOT_POSITIVE
            return Positivity.SEMIDEFINITE
        active.remove(pivot)
        p = a[pivot][pivot]
        for i in active:
            f = a[i][pivot] / p
            if f:
                for j in active:
                    a[i][j] -= f * a[pivot][j]
    return Positivity.DEFINITE


@dataclass(frozen=True)
class DegreeVerdict:
    degree: int
    dimension: int
    rank: int
    positivity: Positivity

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "rank": self.rank,
            "positivity": self.positivity.value,
        }


def _check_positivity_preconditions(spec: ModuleSpec) -> None:
    values = {"l1": spec.l1, "l2": spec.l2, "l3": spec.l3, "h1": spec.h1, "h2": spec.h2}
    complex_params = [k for k, v in values.items() if not is_real(v)]
    if complex_params:
        raise PreconditionError(f"positivity needs real parameters, got complex {complex_params}")
    if spec.l2:
        raise PreconditionError("positivity is only decided for l2 = 0, where the form is Hermitian")


def positivity_scan(spec: ModuleSpec, max_degree: int) -> list[DegreeVerdict]:
    """Per-degree positivity of the contravariant form up to ``max_degree``."""
    _check_form_spec(spec)
    _check_positivity_preconditions(spec)
    verdicts = []
    for d in range(max_degree + 1):
        gram = gram_matrix(spec, d)
        if not gram.is_symmetric():
            raise AsymmetricGramError(
                f"degree {d} Gram matrix is not symmetric; positivity requires real parameters and l2 = 0"
            )
        rows = [[c.x for c in row] for row in gram.entries]
        verdict = DegreeVerdict(d, gram.size, gram.rank(), classify_symmetric(rows))
        logger.debug(f"degree {d}: {verdict.positivity.value} (rank {verdict.rank}/{verdict.dimension})")
        verdicts.append(verdict)
    return verdicts


def is_positive(verdicts: list[DegreeVerdict]) -> bool:
    """True when no scanned degree has a vector of negative norm."""
    return all(v.positivity is not Positivity.NOT_POSITIVE for v in verdicts)
