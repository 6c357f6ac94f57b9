"""Straightening: the action of basis symbols on canonical PBW monomials."""

from __future__ import annotations

import logging
import threading
from functools import lru_cache
from typing import Iterable

from ..config import settings
from ..liealg import BasisSym, LieElt, bracket_symbols
from ..scalars import ONE, Scalar
from .spec import ModuleKind, ModuleSpec, StraighteningError
from .vector import EMPTY, Monomial, PBWVector

logger = logging.getLogger(__name__)

Terms = tuple[tuple[Monomial, Scalar], ...]

_depth = threading.local()


def _character(spec: ModuleSpec, g: BasisSym) -> Scalar | None:
    """Eigenvalue of a non-creation symbol on the generating vector."""
    if spec.kind is ModuleKind.VERMA_HV1 and g.idx == (0,):
        return spec.h1 if g.name == "L" else spec.h2
    return None


def _accumulate(acc: dict[Monomial, Scalar], terms: Terms, coef: Scalar) -> None:
    for m, c in terms:
        value = c * coef
        acc[m] = acc[m] + value if m in acc else value


def _act_on_terms(spec: ModuleSpec, g: BasisSym, terms: Terms) -> Terms:
    acc: dict[Monomial, Scalar] = {}
    for m, c in terms:
        _accumulate(acc, _act(spec, g, m), c)
    return tuple((m, c) for m, c in acc.items() if c)


@lru_cache(maxsize=settings.ACT_CACHE_SIZE)
def _act(spec: ModuleSpec, g: BasisSym, mono: Monomial) -> Terms:
    if g.is_central:
        value = spec.central_value(g)
        return ((mono, value),) if value else ()

    creation = spec.is_creation(g)
    if creation and (not mono or spec.position(g) <= spec.position(mono[0])):
        return (((g, *mono), ONE),)
    if not mono:
        value = _character(spec, g)
        return ((EMPTY, value),) if value else ()

    level = getattr(_depth, "level", 0) + 1
    if level > settings.STRAIGHTEN_DEPTH_LIMIT:
        raise StraighteningError(
            f"straightening {g} against {len(mono)} factors exceeded depth "
            f"{settings.STRAIGHTEN_DEPTH_LIMIT}"
        )
    _depth.level = level
    try:
        # g b w = b (g w) + [g, b] w
        b, rest = mono[0], mono[1:]
        acc: dict[Monomial, Scalar] = {}
        _accumulate(acc, _act_on_terms(spec, b, _act(spec, g, rest)), ONE)
        for s, c in bracket_symbols(g, b):
            _accumulate(acc, _act(spec, s, rest), c)
        return tuple((m, c) for m, c in acc.items() if c)
    finally:
        _depth.level = level - 1


def act(g: BasisSym, v: PBWVector) -> PBWVector:
    """Action of a single basis symbol on a module vector."""
    spec = v.spec
    spec.check_symbol(g)
    acc: dict[Monomial, Scalar] = {}
    for m, c in v.terms.items():
        _accumulate(acc, _act(spec, g, m), c)
    return PBWVector(spec, acc)


def act_element(x: LieElt, v: PBWVector) -> PBWVector:
    """Action of a Lie algebra element, linear in both arguments."""
    out = PBWVector.zero(v.spec)
    for s, c in x.terms.items():
        out = out + act(s, v).scale(c)
    return out


def apply_word(word: Iterable[BasisSym], v: PBWVector) -> PBWVector:
    """X_1 X_2 ... X_k v, applying X_k first."""
    for g in reversed(list(word)):
        v = act(g, v)
    return v


def cache_info():
    return _act.cache_info()
