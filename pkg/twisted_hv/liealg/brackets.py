"""Structure constants and bracket evaluation for the four algebras."""

from __future__ import annotations

import logging
from functools import lru_cache

from sympy import QQ

from ..scalars import Scalar, scalar
from .symbols import SYMBOL_NAMES, AlgebraId, AlgebraMismatchError, BasisSym, LieElt, central

logger = logging.getLogger(__name__)

Terms = tuple[tuple[BasisSym, Scalar], ...]


def _delta(a: int, b: int = 0) -> int:
    return 1 if a == b else 0


def _hv1(a: BasisSym, b: BasisSym) -> list[tuple[BasisSym, Scalar]]:
    alg = AlgebraId.HV1
    (m,), (n,) = a.idx, b.idx
    out: list[tuple[BasisSym, Scalar]] = []
    if a.name == "L" and b.name == "L":
        out.append((BasisSym(alg, "L", (m + n,)), scalar(m - n)))
        if m + n == 0:
            out.append((central(alg, "C1"), scalar(QQ(m**3 - m, 12))))
    elif a.name == "L" and b.name == "I":
        out.append((BasisSym(alg, "I", (m + n,)), scalar(-n)))
        if m + n == 0:
            out.append((central(alg, "C2"), scalar(-(m * m + m))))
    elif a.name == "I" and b.name == "L":
        return [(s, -c) for s, c in _hv1(b, a)]
    elif m + n == 0:
        out.append((central(alg, "C3"), scalar(m)))
    return out


def _frak1(a: BasisSym, b: BasisSym) -> list[tuple[BasisSym, Scalar]]:
    alg = AlgebraId.FRAK1
    (m,), (n,) = a.idx, b.idx
    out: list[tuple[BasisSym, Scalar]] = []
    if a.name == "Lbar" and b.name == "Lbar":
        out.append((BasisSym(alg, "Lbar", (m + n - 1,)), scalar(m - n)))
        if m + n == 2:
            out.append((central(alg, "C1"), scalar(QQ(m * (m - 1) * (m - 2), 12))))
    elif a.name == "Lbar" and b.name == "Ibar":
        out.append((BasisSym(alg, "Ibar", (m + n - 1,)), scalar(-n)))
        if m + n == 1:
            out.append((central(alg, "C2"), scalar(-(m * m - m))))
    elif a.name == "Ibar" and b.name == "Lbar":
        return [(s, -c) for s, c in _frak1(b, a)]
    elif m + n == 0:
        out.append((central(alg, "C3"), scalar(m)))
    return out


def _hv2(a: BasisSym, b: BasisSym) -> list[tuple[BasisSym, Scalar]]:
    alg = AlgebraId.HV2
    (m, n), (r, s) = a.idx, b.idx
    if a.name == "T" and b.name == "T":
        return []
    if a.name == "E" and b.name == "T":
        return [(x, -c) for x, c in _hv2(b, a)]
    target = a.name if a.name == b.name else "T"
    k_lin, k_dep = ("K3", "K4") if target == "E" else ("K1", "K2")
    coef = n * r - m * s
    out: list[tuple[BasisSym, Scalar]] = []
    if (m + r, n + s) == (0, 0):
        # (m, n) and (r, s) are then proportional, so the non-central part vanishes
        assert coef == 0, f"nonzero coefficient landing on (0,0) for {a}, {b}"
        if m:
            out.append((central(alg, k_lin), scalar(m)))
        if n:
            out.append((central(alg, k_dep), scalar(n)))
    elif coef:
        out.append((BasisSym(alg, target, (m + r, n + s)), scalar(coef)))
    return out


def _frak2hat(a: BasisSym, b: BasisSym) -> list[tuple[BasisSym, Scalar]]:
    alg = AlgebraId.FRAK2HAT
    (m, n), (r, s) = a.idx, b.idx
    if a.name == "That" and b.name == "That":
        return []
    if a.name == "Ehat" and b.name == "That":
        return [(x, -c) for x, c in _frak2hat(b, a)]
    target = a.name if a.name == b.name else "That"
    k_lin, k_dep = ("K3", "K4") if target == "Ehat" else ("K1", "K2")
    out: list[tuple[BasisSym, Scalar]] = []
    coef = n * r - m * s
    if coef:
        out.append((BasisSym(alg, target, (m + r, n + s - 1)), scalar(coef)))
    if m + r == 0:
        if n + s + 1 == 0 and m:
            out.append((central(alg, k_lin), scalar(m)))
        if n + s == 0 and n:
            out.append((central(alg, k_dep), scalar(n)))
    return out


_TABLES = {
    AlgebraId.HV1: _hv1,
    AlgebraId.FRAK1: _frak1,
    AlgebraId.HV2: _hv2,
    AlgebraId.FRAK2HAT: _frak2hat,
}


@lru_cache(maxsize=65536)
def bracket_symbols(a: BasisSym, b: BasisSym) -> Terms:
    """Bracket of two basis symbols as a tuple of (symbol, coefficient) terms."""
    if a.algebra is not b.algebra:
        raise AlgebraMismatchError(f"cannot bracket {a} ({a.algebra.value}) with {b}")
    if a.is_central or b.is_central:
        return ()
    return tuple(_TABLES[a.algebra](a, b))


def bracket(a: LieElt | BasisSym, b: LieElt | BasisSym) -> LieElt:
    """Bilinear extension of the structure constants."""
    a = a if isinstance(a, LieElt) else LieElt.of(a)
    b = b if isinstance(b, LieElt) else LieElt.of(b)
    if a.algebra is not b.algebra:
        raise AlgebraMismatchError(
            f"cannot bracket {a.algebra.value} with {b.algebra.value} elements"
        )
    pairs = []
    for sa, ca in a.terms.items():
        for sb, cb in b.terms.items():
            coef = ca * cb
            for s, c in bracket_symbols(sa, sb):
                pairs.append((s, coef * c))
    return LieElt.combine(a.algebra, pairs)


def jacobi_defect(a: LieElt | BasisSym, b: LieElt | BasisSym, c: LieElt | BasisSym) -> LieElt:
    """[a,[b,c]] + [b,[c,a]] + [c,[a,b]]; zero for a Lie algebra."""
    return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))


def generators(algebra: AlgebraId, window: int, outer: int | None = None) -> list[BasisSym]:
    """Non-central basis symbols with every index in [-window, window].

    For the rank-two algebras the first index is limited to [-outer, outer]
    when ``outer`` is given.
    """
    rng = range(-window, window + 1)
    names = [n for n, arity in SYMBOL_NAMES[algebra].items() if arity]
    out: list[BasisSym] = []
    for name in names:
        if algebra in (AlgebraId.HV1, AlgebraId.FRAK1):
            out.extend(BasisSym(algebra, name, (n,)) for n in rng)
            continue
        first = range(-outer, outer + 1) if outer is not None else rng
        for m in first:
            for n in rng:
                if algebra is AlgebraId.HV2 and (m, n) == (0, 0):
                    continue
                out.append(BasisSym(algebra, name, (m, n)))
    return out
