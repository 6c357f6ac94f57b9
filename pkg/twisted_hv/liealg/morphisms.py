"""Algebra morphisms: the shift isomorphism between the rank-one presentations and sigma."""

from __future__ import annotations

from ..scalars import conj, scalar
from .symbols import AlgebraId, BasisSym, InvalidSymbolError, LieElt

_FRAK_TO_HV = {"Lbar": "L", "Ibar": "I"}
_HV_TO_FRAK = {v: k for k, v in _FRAK_TO_HV.items()}


def _require(x: LieElt, algebra: AlgebraId, op: str) -> None:
    if x.algebra is not algebra:
        raise InvalidSymbolError(f"{op} expects a {algebra.value} element, got {x.algebra.value}")


def iso_frak_to_hv(x: LieElt) -> LieElt:
    """Lbar(m) -> L(m-1), Ibar(m) -> I(m), central symbols fixed."""
    _require(x, AlgebraId.FRAK1, "iso_frak_to_hv")
    pairs = []
    for s, c in x.terms.items():
        if s.is_central:
            pairs.append((BasisSym(AlgebraId.HV1, s.name), c))
            continue
        (m,) = s.idx
        shift = 1 if s.name == "Lbar" else 0
        pairs.append((BasisSym(AlgebraId.HV1, _FRAK_TO_HV[s.name], (m - shift,)), c))
    return LieElt.combine(AlgebraId.HV1, pairs)


def iso_hv_to_frak(x: LieElt) -> LieElt:
    """Inverse of :func:`iso_frak_to_hv`."""
    _require(x, AlgebraId.HV1, "iso_hv_to_frak")
    pairs = []
    for s, c in x.terms.items():
        if s.is_central:
            pairs.append((BasisSym(AlgebraId.FRAK1, s.name), c))
            continue
        (n,) = s.idx
        shift = 1 if s.name == "L" else 0
        pairs.append((BasisSym(AlgebraId.FRAK1, _HV_TO_FRAK[s.name], (n + shift,)), c))
    return LieElt.combine(AlgebraId.FRAK1, pairs)


def sigma_symbol(s: BasisSym) -> LieElt:
    """sigma on a basis symbol of hv1 (coefficient one, so no conjugation)."""
    if s.algebra is not AlgebraId.HV1:
        raise InvalidSymbolError(f"sigma is defined on hv1 only, got {s}")
    if s.name == "C2":
        return LieElt.of(s, scalar(-1))
    if s.is_central:
        return LieElt.of(s)
    (n,) = s.idx
    image = LieElt.of(BasisSym(AlgebraId.HV1, s.name, (-n,)))
    if s.name == "I" and n == 0:
        image = image + LieElt.of(BasisSym(AlgebraId.HV1, "C2"), scalar(-2))
    return image


def sigma(x: LieElt) -> LieElt:
    """Anti-linear anti-involution of hv1.

    sigma(L_n) = L_{-n}, sigma(I_n) = I_{-n} - 2 delta_{n,0} C2, sigma(C2) = -C2,
    C1 and C3 fixed; coefficients are conjugated.
    """
    _require(x, AlgebraId.HV1, "sigma")
    out = LieElt.zero(AlgebraId.HV1)
    for s, c in x.terms.items():
        out = out + sigma_symbol(s).scale(conj(c))
    return out
