"""Generating functions of the algebras as coefficient maps x^q -> LieElt."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from sympy import QQ

from ..liealg import AlgebraId, E, Ehat, I, Ibar, L, Lbar, LieElt, T, That, central
from ..scalars import scalar


@dataclass(frozen=True)
class GeneratingFunction:
    """A formal series sum_q F_q x^q with Lie-algebra coefficients."""

    name: str
    algebra: AlgebraId
    coefficient_fn: Callable[[int], LieElt]

    def coefficient(self, q: int) -> LieElt:
        return self.coefficient_fn(q)

    def derivative(self) -> GeneratingFunction:
        """d/dx: the coefficient of x^q becomes (q + 1) F_{q+1}."""
        fn = self.coefficient_fn
        return GeneratingFunction(
            f"d({self.name})", self.algebra, lambda q: fn(q + 1).scale(scalar(q + 1))
        )

    def euler(self) -> GeneratingFunction:
        """x d/dx: the coefficient of x^q becomes q F_q."""
        fn = self.coefficient_fn
        return GeneratingFunction(
            f"xd({self.name})", self.algebra, lambda q: fn(q).scale(scalar(q))
        )


def _one(s) -> LieElt:
    return LieElt.of(s)


def field_L() -> GeneratingFunction:
    """L(x) = sum_n L_n x^{-n-2}."""
    return GeneratingFunction("L", AlgebraId.HV1, lambda q: _one(L(-q - 2)))


def field_I() -> GeneratingFunction:
    """I(x) = sum_n I_n x^{-n-1}."""
    return GeneratingFunction("I", AlgebraId.HV1, lambda q: _one(I(-q - 1)))


def field_L_tilde() -> GeneratingFunction:
    """x^2 L(x) = sum_n L_n x^{-n}."""
    return GeneratingFunction("L~", AlgebraId.HV1, lambda q: _one(L(-q)))


def field_I_tilde() -> GeneratingFunction:
    """x I(x) = sum_n I_n x^{-n}."""
    return GeneratingFunction("I~", AlgebraId.HV1, lambda q: _one(I(-q)))


def field_L_hat() -> GeneratingFunction:
    """L~(x) - c1/24."""
    shift = LieElt.of(central(AlgebraId.HV1, "C1"), scalar(QQ(-1, 24)))

    def coefficient(q: int) -> LieElt:
        value = _one(L(-q))
        return value + shift if q == 0 else value

    return GeneratingFunction("L^", AlgebraId.HV1, coefficient)


def field_I_hat() -> GeneratingFunction:
    """I~(x) - c2."""
    shift = LieElt.of(central(AlgebraId.HV1, "C2"), scalar(-1))

    def coefficient(q: int) -> LieElt:
        value = _one(I(-q))
        return value + shift if q == 0 else value

    return GeneratingFunction("I^", AlgebraId.HV1, coefficient)


def field_L_bar() -> GeneratingFunction:
    """Lbar(x) = sum_n Lbar_n x^{-n-1}."""
    return GeneratingFunction("Lbar", AlgebraId.FRAK1, lambda q: _one(Lbar(-q - 1)))


def field_I_bar() -> GeneratingFunction:
    """Ibar(x) = sum_n Ibar_n x^{-n-1}."""
    return GeneratingFunction("Ibar", AlgebraId.FRAK1, lambda q: _one(Ibar(-q - 1)))


def _torus(name: str, factory, m: int) -> GeneratingFunction:
    def coefficient(q: int) -> LieElt:
        if (m, -q) == (0, 0):
            return LieElt.zero(AlgebraId.HV2)
        return _one(factory(m, -q))

    return GeneratingFunction(f"{name}_{m}", AlgebraId.HV2, coefficient)


def field_T_torus(m: int) -> GeneratingFunction:
    """T_m(x) = sum_n t1^m t2^n x^{-n}; the (0,0) term is absent."""
    return _torus("T", T, m)


def field_E_torus(m: int) -> GeneratingFunction:
    """E_m(x) = sum_n E_{m,n} x^{-n}; the (0,0) term is absent."""
    return _torus("E", E, m)


def field_T_affine(m: int) -> GeneratingFunction:
    """T^m(x) = sum_n (T^m (x) t^n) x^{-n-1}."""
    return GeneratingFunction(f"T^{m}", AlgebraId.FRAK2HAT, lambda q: _one(That(m, -q - 1)))


def field_E_affine(m: int) -> GeneratingFunction:
    """E^m(x) = sum_n (E^m (x) t^n) x^{-n-1}."""
    return GeneratingFunction(f"E^{m}", AlgebraId.FRAK2HAT, lambda q: _one(Ehat(m, -q - 1)))
