"""Graded PBW bases."""

from __future__ import annotations

import logging
from functools import lru_cache

from .spec import ModuleMismatchError, ModuleSpec
from .vector import Monomial

logger = logging.getLogger(__name__)


@lru_cache(maxsize=512)
def enumerate_basis(spec: ModuleSpec, degree: int) -> tuple[Monomial, ...]:
    """Canonical monomials of the given degree, without duplicates.

    Multisets of creation symbols are generated in canonical order, so every
    monomial is produced exactly once and already sorted.
    """
    if degree < 0:
        raise ModuleMismatchError(f"degree must be >= 0, got {degree}")
    alphabet = spec.creation_symbols(degree)
    weights = [spec.symbol_degree(s) for s in alphabet]
    out: list[Monomial] = []

    def extend(start: int, remaining: int, prefix: list) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for i in range(start, len(alphabet)):
            if weights[i] <= remaining:
                prefix.append(alphabet[i])
                extend(i, remaining - weights[i], prefix)
                prefix.pop()

    extend(0, degree, [])
    logger.debug(f"{spec.kind.value} degree {degree}: {len(out)} monomials")
    return tuple(out)


def graded_dim(spec: ModuleSpec, degree: int) -> int:
    return len(enumerate_basis(spec, degree))
