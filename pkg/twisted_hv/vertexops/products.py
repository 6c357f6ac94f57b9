"""n-th products of fields, the state-field map and the commutator formula."""

from __future__ import annotations

import logging

from ..errors import HVError
from ..liealg import AlgebraId, BasisSym
from ..pbwmod import ModuleKind, ModuleMismatchError, ModuleSpec, PBWVector
from ..scalars import Scalar, binom, scalar
from .fields import (
    TruncatedField,
    UntrustedWindowError,
    TruncatedModule,
    derivative_field,
    generator_field,
    identity_field,
    linear_combination,
    split_by_degree,
)

logger = logging.getLogger(__name__)


class LocalityError(HVError):
    """Raised when two fields are not local of the claimed order on the sampled vectors."""


def field_nth_product(
    a: TruncatedField, b: TruncatedField, n: int, k: int | None = None
) -> TruncatedField:
    """The field a(x)_n b(x), mode by mode from the Borcherds product formula.

    (a_n b)_m w = sum_i (-1)^i binom(n, i) (a_{n-i} b_{m+i} w - (-1)^n b_{n+m-i} a_i w)
    in vertex-mode numbering; the sum is finite on each homogeneous w. When the
    locality order ``k`` is given it is checked first and n >= k gives zero.
    """
    if a.module != b.module:
        raise ModuleMismatchError(f"{a.name} and {b.name} act on different modules")
    if k is not None:
        check_locality(a, b, k)
        if n >= k:
            return linear_combination(f"{a.name}_({n}){b.name}", a.module, [])
    sign_n = -1 if n % 2 else 1

    def vertex_mode(m: int, w: PBWVector) -> PBWVector:
        out = PBWVector.zero(w.spec)
        for d, part in split_by_degree(w).items():
            first_top = d + b.offset - m - 1
            second_top = d + a.offset - 1
            if n >= 0:
                first_top, second_top = min(first_top, n), min(second_top, n)
            for i in range(max(first_top, second_top) + 1):
                c = binom(n, i) * (-1) ** i
                if not c:
                    continue
                if i <= first_top:
                    out = out + a.vertex_mode(n - i, b.vertex_mode(m + i, part)).scale(scalar(c))
                if i <= second_top:
                    term = b.vertex_mode(n + m - i, a.vertex_mode(i, part))
                    out = out - term.scale(scalar(c * sign_n))
        return out

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        return vertex_mode(-p - 1, w)

    offset = a.offset + b.offset - n - 1
    return TruncatedField(f"{a.name}_({n}){b.name}", a.module, coefficient, offset, weight_shift=offset)


def normal_ordered(a: TruncatedField, b: TruncatedField) -> TruncatedField:
    """:a(x) b(x): = a^-(x) b(x) + b(x) a^+(x), the (-1)-st product written out."""

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        m = -p - 1
        out = PBWVector.zero(w.spec)
        for d, part in split_by_degree(w).items():
            # a_i with i < 0 after b_{m-i-1}: b_{m-i-1} w needs degree d + wt_b - m + i >= 0
            for i in range(m - d - b.offset, 0):
                out = out + a.vertex_mode(i, b.vertex_mode(m - i - 1, part))
            for i in range(0, d + a.offset):
                out = out + b.vertex_mode(m - i - 1, a.vertex_mode(i, part))
        return out

    return TruncatedField(
        f":{a.name} {b.name}:", a.module, coefficient, a.offset + b.offset, a.offset + b.offset
    )


def check_locality(a: TruncatedField, b: TruncatedField, k: int, max_degree: int = 2) -> None:
    """Check (a_j b) = 0 for j = k, k+1, k+2 on low-degree vectors."""
    sample = list(a.module.vectors(max_degree))
    for j in range(k, k + 3):
        product = field_nth_product(a, b, j)
        for m in range(-2, 3):
            for w in sample:
                if product.vertex_mode(m, w):
                    raise LocalityError(f"{a.name}, {b.name} are not local of order {k}: ({j}, {m})")


# creation symbol -> (generator field name, vertex mode index)
def _state_letter(s: BasisSym) -> tuple[str, int]:
    (n,) = s.idx
    if s.name == "L":
        return "L", n + 1
    return s.name, n


_STATE_KINDS = (ModuleKind.VACUUM_HV1, ModuleKind.VACUUM_VIR, ModuleKind.VACUUM_FRAK1)


def vacuum_spec_for(spec: ModuleSpec) -> ModuleSpec:
    """The vertex algebra whose states act on modules of ``spec``."""
    if spec.algebra is AlgebraId.FRAK1:
        return ModuleSpec(ModuleKind.VACUUM_FRAK1, l1=spec.l1, l2=spec.l2, l3=spec.l3)
    if spec.kind is ModuleKind.VACUUM_VIR:
        return spec
    if spec.algebra is AlgebraId.HV1:
        return ModuleSpec(ModuleKind.VACUUM_HV1, l1=spec.l1, l2=spec.l2, l3=spec.l3)
    raise ModuleMismatchError(f"no vertex algebra acts on {spec.kind.value} here")


def _check_state(state: PBWVector, module: TruncatedModule) -> None:
    if state.spec.kind not in _STATE_KINDS:
        raise ModuleMismatchError(f"states must come from a vacuum module, got {state.spec.kind.value}")
    if module.spec.algebra is not state.spec.algebra:
        raise ModuleMismatchError(
            f"state of {state.spec.algebra.value} cannot act on {module.spec.kind.value}"
        )
    names = ("l1",) if state.spec.kind is ModuleKind.VACUUM_VIR else ("l1", "l2", "l3")
    for name in names:
        if getattr(state.spec, name) != getattr(module.spec, name):
            raise ModuleMismatchError(f"state and module disagree on {name}")


def state_field(state: PBWVector, module: TruncatedModule, path: str = "borcherds") -> TruncatedField:
    """Y_W(state, x) for a vacuum state, from its PBW monomials.

    ``path="borcherds"`` iterates field_nth_product along each monomial;
    ``path="normal"`` expands Y(a_{-k-1} b) = :(d^k a / k!) Y(b): instead.
    """
    _check_state(state, module)
    if path not in ("borcherds", "normal"):
        raise ValueError(f"unknown path {path!r}")
    generators: dict[str, TruncatedField] = {}
    by_offset: dict[int, list[tuple[TruncatedField, Scalar]]] = {}
    for mono, coef in state.terms.items():
        current = identity_field(module)
        for s in reversed(mono):
            name, j = _state_letter(s)
            if name not in generators:
                generators[name] = generator_field(name, module)
            if path == "borcherds":
                current = field_nth_product(generators[name], current, j)
            else:
                current = normal_ordered(derivative_field(generators[name], -j - 1), current)
        by_offset.setdefault(current.offset, []).append((current, coef))
    name = f"Y({state})"
    if len(by_offset) <= 1:
        return linear_combination(name, module, next(iter(by_offset.values()), []))
    pieces = [linear_combination(f"{name}[{o}]", module, parts) for o, parts in by_offset.items()]

    def coefficient(p: int, w: PBWVector) -> PBWVector:
        out = PBWVector.zero(w.spec)
        for f in pieces:
            out = out + f.coefficient(p, w)
        return out

    # smallest offset, so no homogeneous piece is skipped
    return TruncatedField(name, module, coefficient, min(by_offset), weight_shift=1)


def mode_action(
    state: PBWVector, n: int, w: PBWVector, module: TruncatedModule | None = None
) -> PBWVector:
    """state_(n) w: the n-th vertex mode of Y_W(state, x) applied to w."""
    module = module or TruncatedModule(w.spec)
    if abs(n) > module.mode_window:
        raise UntrustedWindowError(f"mode {n} outside window [-{module.mode_window}, {module.mode_window}]")
    if w.max_degree() > module.max_degree:
        raise UntrustedWindowError(f"input degree {w.max_degree()} exceeds truncation {module.max_degree}")
    return state_field(state, module).vertex_mode(n, w)


def borcherds_defect(
    u: PBWVector,
    v: PBWVector,
    module: TruncatedModule,
    window: int = 3,
    degree: int = 2,
) -> list[dict]:
    """Nonzero entries of [u_m, v_n] w - sum_i binom(m, i) (u_i v)_{m+n-i} w.

    Vertex-mode numbering; m, n range over [-window, window] and w over the
    module basis up to ``degree``. An empty list means the commutator formula holds.
    """
    if window > module.mode_window or degree > module.max_degree:
        raise UntrustedWindowError(
            f"window {window} / degree {degree} exceed the truncation "
            f"({module.mode_window}, {module.max_degree})"
        )
    y_u, y_v = state_field(u, module), state_field(v, module)
    y_u_vacuum = state_field(u, TruncatedModule(u.spec))
    # u_(i) v has degree deg u + deg v - i - 1, so i < deg u + deg v
    products: dict[int, TruncatedField] = {}
    for i in range(u.max_degree() + v.max_degree()):
        state = y_u_vacuum.vertex_mode(i, v)
        if state:
            products[i] = state_field(state, module)
    logger.debug(f"u_(i) v nonzero for i in {sorted(products)}")

    defects = []
    for w in module.vectors(degree):
        for m in range(-window, window + 1):
            for n in range(-window, window + 1):
                lhs = y_u.vertex_mode(m, y_v.vertex_mode(n, w)) - y_v.vertex_mode(n, y_u.vertex_mode(m, w))
                for i, y_uv in products.items():
                    c = binom(m, i)
                    if c:
                        lhs = lhs - y_uv.vertex_mode(m + n - i, w).scale(scalar(c))
                if lhs:
                    defects.append(
                        {
                            "m": m,
                            "n": n,
                            "input": w.to_json()["terms"],
                            "defect": lhs.to_json()["terms"],
                        }
                    )
    if defects:
        logger.warning(f"commutator formula fails at {len(defects)} entries")
    return defects
