"""e-products of fields: the coordinate change x1 = x e^z applied to local pairs.

For fields a, b with (x1 - x)^k a(x1) b(x) = (x1 - x)^k b(x) a(x1) on the module,

    Y^e(a(x), z) b(x) = x^-k (e^z - 1)^-k ((x1 - x)^k a(x1) b(x))|_{x1 = x e^z}

and a(x)^e_n b(x) is its z^(-n-1) coefficient.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from sympy import QQ
from sympy.polys.ring_series import rs_exp, rs_mul, rs_pow, rs_series_inversion
from sympy.polys.rings import PolyElement, ring

from ..config import settings
from ..errors import HVError
from ..pbwmod import ModuleMismatchError, PBWVector
from ..scalars import binom, scalar
from .fields import TruncatedField, linear_combination, split_by_degree
from .products import LocalityError

logger = logging.getLogger(__name__)

_RING, _Z = ring("z", QQ)


class InsufficientOrderError(HVError):
    """Raised when a z-coefficient lies beyond the truncation order of a series."""


@dataclass(frozen=True)
class ZSeries:
    """z^valuation times a power series known up to (excluding) z^order."""

    series: PolyElement
    valuation: int
    order: int

    @classmethod
    def exp(cls, c: int, order: int) -> ZSeries:
        """e^(c z)."""
        if not c:
            return cls(_RING(1), 0, order)
        return cls(rs_exp(c * _Z, _Z, order), 0, order)

    @classmethod
    def difference_power(cls, k: int, order: int) -> ZSeries:
        """(e^z - 1)^k, stored as z^k ((e^z - 1)/z)^k."""
        quotient = _RING.from_dict({(j,): QQ(1, factorial(j + 1)) for j in range(order)})
        return cls(rs_pow(quotient, k, _Z, order), k, order)

    def inverse(self) -> ZSeries:
        return ZSeries(rs_series_inversion(self.series, _Z, self.order), -self.valuation, self.order)

    def __mul__(self, other: ZSeries) -> ZSeries:
        order = min(self.order, other.order)
        return ZSeries(
            rs_mul(self.series, other.series, _Z, order), self.valuation + other.valuation, order
        )

    def coefficient(self, j: int):
        """Coefficient of z^j."""
        index = j - self.valuation
        if index < 0:
            return QQ(0)
        if index >= self.order:
            raise InsufficientOrderError(
                f"z^{j} needs order {index + 1}, series is exact below {self.order}"
            )
        return self.series.get((index,), QQ(0))


@lru_cache(maxsize=1024)
def _kernel(k: int, order: int) -> ZSeries:
    """(e^z - 1)^-k."""
    return ZSeries.difference_power(k, order).inverse()


@lru_cache(maxsize=65536)
def e_coefficient(P: int, k: int, n: int, order: int):
    """[z^(-n-1)] e^(P z) (e^z - 1)^-k."""
    return (ZSeries.exp(P, order) * _kernel(k, order)).coefficient(-n - 1)


def _g_entry(a: TruncatedField, b: TruncatedField, k: int, P: int, Q: int, w: PBWVector, ab: bool):
    """Coefficient of x1^P x^Q in (x1 - x)^k a(x1) b(x) w, or in the b(x) a(x1) ordering."""
    out = PBWVector.zero(w.spec)
    for i in range(k + 1):
        c = binom(k, i) * (-1) ** (k - i)
        p, q = P - i, Q - (k - i)
        if ab:
            term = a.coefficient(p, b.coefficient(q, w))
        else:
            term = b.coefficient(q, a.coefficient(p, w))
        if term:
            out = out + term.scale(scalar(c))
    return out


def e_product(
    a: TruncatedField,
    b: TruncatedField,
    n: int,
    k: int,
    z_order: int | None = None,
) -> TruncatedField:
    """The field a(x)^e_n b(x) for a pair local of order ``k``.

    Each x^N coefficient is evaluated exactly on a homogeneous vector of
    degree d: the x1-powers P that can contribute lie in
    [-d - offset_a, N + k + d + offset_b], and both orderings of the
    product are compared on that range (LocalityError on a mismatch).
    ``z_order`` defaults to the smallest order that makes n exact; an
    explicit order that is too small raises InsufficientOrderError.
    """
    if a.module != b.module:
        raise ModuleMismatchError(f"{a.name} and {b.name} act on different modules")
    if k < 0:
        raise ValueError(f"locality order must be non-negative, got {k}")
    needed = k - n
    order = max(needed, 1) if z_order is None else z_order
    if n < k and needed > order:
        raise InsufficientOrderError(f"{a.name}^e_{n}{b.name} needs z-order {needed}, got {order}")
    name = f"{a.name}^e_({n}){b.name}"
    offset = a.offset + b.offset
    if n >= k:
        return linear_combination(name, a.module, [])

    def coefficient(N: int, w: PBWVector) -> PBWVector:
        out = PBWVector.zero(w.spec)
        for d, part in split_by_degree(w).items():
            low, high = -d - a.offset, N + k + d + b.offset
            for P in range(low - k - 1, high + k + 2):
                Q = N + k - P
                ab = _g_entry(a, b, k, P, Q, part, ab=True)
                ba = _g_entry(a, b, k, P, Q, part, ab=False)
                if ab != ba:
                    raise LocalityError(
                        f"{a.name}, {b.name} are not local of order {k} at x1^{P} x^{Q}"
                    )
                if not ab or P < low or P > high:
                    continue
                c = e_coefficient(P, k, n, order)
                if c:
                    out = out + ab.scale(scalar(c))
        return out

    logger.debug(f"e-product {name} with z-order {order}")
    return TruncatedField(name, a.module, coefficient, offset, weight_shift=offset)
