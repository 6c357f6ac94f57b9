"""Zhu's algebra A(V) of the vacuum module, identified with C[x, y] (x = [omega], y = [I])."""

from __future__ import annotations

import logging
from functools import lru_cache

from sympy import QQ_I
from sympy.polys.rings import PolyElement, ring

from ..liealg import I, L
from ..pbwmod import Monomial, ModuleKind, ModuleSpec, PBWVector, act
from ..scalars import ONE, binom, scalar, scalar_to_json
from ..vertexops import TruncatedModule, state_field
from .errors import NonVacuumError, PreconditionError

logger = logging.getLogger(__name__)

ZHU_RING, ZHU_X, ZHU_Y = ring("x,y", QQ_I)

ZhuPoly = PolyElement


def _require_vacuum(v: PBWVector) -> None:
    if v.spec.kind is not ModuleKind.VACUUM_HV1:
        raise NonVacuumError(f"Zhu reduction is defined on VacuumHV1, got {v.spec.kind.value}")


def _reduce_vector(v: PBWVector) -> ZhuPoly:
    out = ZHU_RING.zero
    for mono, c in v.terms.items():
        out = out + _reduce_monomial(v.spec, mono) * c
    return out


@lru_cache(maxsize=4096)
def _reduce_monomial(spec: ModuleSpec, mono: Monomial) -> ZhuPoly:
    if not mono:
        return ZHU_RING.one
    first, rest = mono[0], PBWVector(spec, {mono[1:]: ONE})
    (n,) = first.idx
    k = -n
    if first.name == "I":
        if k == 1:
            # I * b = I(-1) b + I(0) b and I(0) vanishes on the vacuum module
            return ZHU_Y * _reduce_vector(rest)
        return -_reduce_vector(act(I(n + 1), rest))
    if k == 2:
        # omega * b = L(-2) b + 2 L(-1) b + L(0) b
        return (
            ZHU_X * _reduce_vector(rest)
            - _reduce_vector(act(L(-1), rest)) * 2
            - _reduce_vector(act(L(0), rest))
        )
    return -_reduce_vector(act(L(n + 1), rest)) * 2 - _reduce_vector(act(L(n + 2), rest))


def zhu_reduce(v: PBWVector) -> ZhuPoly:
    """Image of [v] in C[x, y] under the inverse of x -> [omega], y -> [I].

    Rewrites the leftmost factor of each monomial with the O(V) relations
    [I(-k) b] = -[I(-k+1) b] (k >= 2), [L(-k) b] = -2[L(-k+1) b] - [L(-k+2) b] (k >= 3),
    [I(-1) b] = y [b] and [L(-2) b] = x [b] - 2[L(-1) b] - [L(0) b]; every
    step lowers the degree.
    """
    _require_vacuum(v)
    return _reduce_vector(v)


def zhu_product(u: PBWVector, v: PBWVector) -> PBWVector:
    """u * v = sum_i binom(wt u, i) u_(i-1) v for homogeneous u."""
    _require_vacuum(u)
    _require_vacuum(v)
    if len(u.degrees()) > 1:
        raise PreconditionError(f"zhu_product needs a homogeneous left factor, got degrees {sorted(u.degrees())}")
    if u.is_zero():
        return PBWVector.zero(v.spec)
    wt = u.max_degree()
    field = state_field(u, TruncatedModule(v.spec))
    out = PBWVector.zero(v.spec)
    for i in range(wt + 1):
        c = binom(wt, i)
        out = out + field.vertex_mode(i - 1, v).scale(scalar(c))
    return out


def o_relation(a: PBWVector, b: PBWVector, m: int, n: int = 0) -> PBWVector:
    """Res_z Y(a, z) (1 + z)^(wt a + n) / z^(2 + m) b, an element of O(V) for m >= n >= 0."""
    if not m >= n >= 0:
        raise PreconditionError(f"O(V) relation needs m >= n >= 0, got m={m}, n={n}")
    wt = a.max_degree()
    field = state_field(a, TruncatedModule(b.spec))
    out = PBWVector.zero(b.spec)
    for i in range(wt + n + 1):
        out = out + field.vertex_mode(i - 2 - m, b).scale(scalar(binom(wt + n, i)))
    return out


def zhu_relation_defect(spec: ModuleSpec, max_degree: int = 3, max_m: int = 2) -> list[dict]:
    """Elements of O(V) built from a in {omega, I} whose reduction is not zero."""
    omega = PBWVector(spec, {(L(-2),): ONE})
    heis = PBWVector(spec, {(I(-1),): ONE})
    module = TruncatedModule(spec)
    defects = []
    for name, a in (("omega", omega), ("I", heis)):
        for b in module.vectors(max_degree):
            for m in range(max_m + 1):
                for n in range(m + 1):
                    image = zhu_reduce(o_relation(a, b, m, n))
                    if image:
                        defects.append({"a": name, "b": str(b), "m": m, "n": n, "image": str(image)})
    if defects:
        logger.warning(f"{len(defects)} O(V) elements reduce to nonzero polynomials")
    return defects


def zhu_poly_to_json(p: ZhuPoly) -> dict:
    terms = sorted(p.terms(), key=lambda t: t[0])
    return {
        "text": str(p.as_expr()) if p else "0",
        "terms": [{"x": a, "y": b, "coef": scalar_to_json(c)} for (a, b), c in terms],
    }
