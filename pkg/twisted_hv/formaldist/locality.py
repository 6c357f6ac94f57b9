"""Order of locality of a pair of generating functions."""

from __future__ import annotations

import logging

from ..config import settings
from ..errors import HVError
from .identities import IdentityId, commutator_table, identity_sides
from .window import WindowBounds

logger = logging.getLogger(__name__)


class InconclusiveWindowError(HVError):
    """Raised when a window is too small to certify an answer."""


def _meets_delta_support(bounds: WindowBounds) -> bool:
    # delta and x1^{-1} delta live on the anti-diagonals p + q = 0 and p + q = -1
    return (
        not bounds.is_empty()
        and bounds.pmin + bounds.qmin <= -1
        and bounds.pmax + bounds.qmax >= 0
    )


def locality_order(
    pair: IdentityId, bounds: WindowBounds, max_order: int | None = None
) -> int:
    """Smallest k with (x1 - x2)^k [A(x1), B(x2)] = 0 on the truncation-safe interior."""
    max_order = settings.MAX_LOCALITY_ORDER if max_order is None else max_order
    sides = identity_sides(pair)
    table = commutator_table(sides.left, sides.right, bounds)
    if table.is_zero():
        raise InconclusiveWindowError(f"{pair}: commutator vanishes on {bounds}")
    for k in range(max_order + 1):
        inner = bounds.interior(k)
        if not _meets_delta_support(inner):
            raise InconclusiveWindowError(
                f"{pair}: window {bounds} too small to certify order {k}"
            )
        if table.multiply_by_difference_power(k).is_zero():
            if not any(inner.contains(p, q) for (p, q), _ in table.items()):
                raise InconclusiveWindowError(f"{pair}: no commutator data inside {inner}")
            logger.debug(f"{pair}: locality order {k} on {bounds}")
            return k
    raise InconclusiveWindowError(f"{pair}: no order <= {max_order} on {bounds}")
