"""Expansions of the formal delta function and its derivatives."""

from __future__ import annotations

from ..scalars import falling, scalar
from .window import BiLaurentWindow, WindowBounds


def delta_partner(order: int, weighted: bool, p: int) -> int:
    """The only x2 exponent q with a nonzero coefficient at x1^p."""
    return -p if weighted else -p - 1 - order


def delta_coefficient(order: int, weighted: bool, p: int, q: int) -> int:
    """Coefficient of x1^p x2^q.

    Unweighted: (d/dx2)^order x1^{-1} delta(x2/x1) = sum_n falling(n, order) x1^{-n-1} x2^{n-order}.
    Weighted: (x2 d/dx2)^order delta(x2/x1) = sum_n n^order x1^{-n} x2^n.
    """
    if order < 0:
        raise ValueError(f"derivative order must be >= 0, got {order}")
    if q != delta_partner(order, weighted, p):
        return 0
    if weighted:
        return q**order
    return falling(-p - 1, order)


def delta_derivative_window(order: int, weighted: bool, bounds: WindowBounds) -> BiLaurentWindow:
    """Coefficient table of a delta derivative restricted to ``bounds``."""
    if order < 0:
        raise ValueError(f"derivative order must be >= 0, got {order}")
    entries = {}
    for p in range(bounds.pmin, bounds.pmax + 1):
        q = delta_partner(order, weighted, p)
        if not bounds.contains(p, q):
            continue
        c = delta_coefficient(order, weighted, p, q)
        if c:
            entries[(p, q)] = scalar(c)
    return BiLaurentWindow(bounds, entries)
