"""The translation derivation d on vacuum modules."""

from __future__ import annotations

from ..liealg import BasisSym, LieElt
from ..scalars import ONE, scalar
from .spec import ModuleKind, ModuleMismatchError, ModuleSpec
from .straighten import act, act_element
from .vector import Monomial, PBWVector

_SUPPORTED = (
    ModuleKind.VACUUM_HV1,
    ModuleKind.VACUUM_VIR,
    ModuleKind.VACUUM_FRAK1,
    ModuleKind.VACUUM_FRAK2HAT,
)


def d_bar(s: BasisSym) -> LieElt:
    """Derivation of the algebra lifting d.

    hv1: L_n -> -(n+1) L_{n-1}, I_n -> -n I_{n-1}; frak1 and frak2hat: X_n -> -n X_{n-1}
    on the last index. Central symbols go to zero.
    """
    if s.is_central:
        return LieElt.zero(s.algebra)
    *outer, n = s.idx
    factor = -(n + 1) if s.name == "L" else -n
    if not factor:
        return LieElt.zero(s.algebra)
    return LieElt.of(BasisSym(s.algebra, s.name, (*outer, n - 1)), scalar(factor))


def _d_monomial(spec: ModuleSpec, mono: Monomial) -> PBWVector:
    if not mono:
        return PBWVector.zero(spec)
    # d(b w) = d_bar(b) w + b d(w)
    b, rest = mono[0], mono[1:]
    rest_vec = PBWVector(spec, {rest: ONE})
    return act_element(d_bar(b), rest_vec) + act(b, _d_monomial(spec, rest))


def d_action(v: PBWVector) -> PBWVector:
    """Apply d, with d(1) = 0."""
    if v.spec.kind not in _SUPPORTED:
        raise ModuleMismatchError(
            f"d is only defined on vacuum modules, got {v.spec.kind.value}"
        )
    out = PBWVector.zero(v.spec)
    for m, c in v.terms.items():
        out = out + _d_monomial(v.spec, m).scale(c)
    return out


def d_power(v: PBWVector, k: int) -> PBWVector:
    for _ in range(k):
        v = d_action(v)
    return v
