"""Tests for PBW bases, straightening and the derivation d."""

import pytest
from sympy import Poly, prod, series, symbols

from twisted_hv.liealg import (
    AlgebraId,
    E,
    I,
    Ibar,
    L,
    Lbar,
    LieElt,
    T,
    That,
    bracket,
    central,
    generators,
)
from twisted_hv.pbwmod import (
    MissingBoundError,
    ModuleKind,
    ModuleMismatchError,
    ModuleSpec,
    PBWVector,
    act,
    act_element,
    apply_word,
    d_action,
    enumerate_basis,
    graded_dim,
)
from twisted_hv.scalars import parse_scalar, scalar


@pytest.fixture
def vac():
    return ModuleSpec.build("VacuumHV1", l1="3/2", l2=2, l3=5)


@pytest.fixture
def verma():
    return ModuleSpec.build("VermaHV1", l1=1, l2="1/3", l3=2, h1="1/2", h2=3)


def series_dims(max_degree, l_start):
    """Coefficients of prod_{n>=1}(1-q^n)^{-1} prod_{n>=l_start}(1-q^n)^{-1}."""
    q = symbols("q")
    n_max = max_degree + 1
    expr = prod(1 / (1 - q**n) for n in range(1, n_max)) * prod(
        1 / (1 - q**n) for n in range(l_start, n_max)
    )
    poly = Poly(series(expr, q, 0, n_max).removeO(), q)
    return [int(poly.coeff_monomial(q**n)) for n in range(n_max)]


class TestBasis:
    """Enumeration of canonical monomials."""

    def test_vacuum_degree_zero(self, vac):
        assert enumerate_basis(vac, 0) == ((),)

    def test_vacuum_degree_two(self, vac):
        assert set(enumerate_basis(vac, 2)) == {(I(-1), I(-1)), (I(-2),), (L(-2),)}

    def test_verma_degree_one(self, verma):
        assert set(enumerate_basis(verma, 1)) == {(I(-1),), (L(-1),)}

    def test_vacuum_dims(self, vac):
        assert [graded_dim(vac, n) for n in range(7)] == [1, 1, 3, 5, 10, 16, 29]

    def test_vacuum_dims_match_series(self, vac):
        assert [graded_dim(vac, n) for n in range(13)] == series_dims(12, 2)

    def test_verma_dims_match_series(self, verma):
        assert graded_dim(verma, 2) == 5
        assert [graded_dim(verma, n) for n in range(9)] == series_dims(8, 1)

    def test_frak1_dims_match_hv1(self, vac):
        frak = ModuleSpec.build("VacuumFRAK1", l1=1)
        assert [graded_dim(frak, n) for n in range(8)] == [graded_dim(vac, n) for n in range(8)]

    def test_frak1_lbar_degree(self):
        frak = ModuleSpec.build("VacuumFRAK1")
        assert (Lbar(-1),) in enumerate_basis(frak, 2)
        assert (Lbar(-1),) not in enumerate_basis(frak, 1)
        assert enumerate_basis(frak, 1) == ((Ibar(-1),),)

    def test_frak2hat_count(self):
        spec = ModuleSpec.build("VacuumFRAK2HAT", m_bound=1)
        basis = enumerate_basis(spec, 1)
        assert len(basis) == 6
        assert (That(0, -1),) in basis

    def test_frak2hat_needs_bound(self):
        with pytest.raises(MissingBoundError, match="m_bound"):
            enumerate_basis(ModuleSpec.build("VacuumFRAK2HAT"), 1)

    def test_canonical_order(self, vac):
        for mono in enumerate_basis(vac, 5):
            keys = [vac.position(s) for s in mono]
            assert keys == sorted(keys)
        assert len(set(enumerate_basis(vac, 5))) == 16

    def test_virasoro_sector(self):
        vir = ModuleSpec.build("VacuumVir", l1=1)
        assert [graded_dim(vir, n) for n in range(7)] == [1, 0, 1, 1, 2, 2, 4]


class TestAct:
    """Straightening examples."""

    def test_l2_on_l_minus_2(self, vac):
        v = PBWVector.monomial(vac, (L(-2),))
        assert act(L(2), v) == PBWVector.vacuum(vac).scale(parse_scalar("3/4"))

    def test_heisenberg_pairing(self, vac):
        v = PBWVector.monomial(vac, (I(-1),))
        assert act(I(1), v) == PBWVector.vacuum(vac).scale(scalar(5))

    @pytest.mark.parametrize("degree", [0, 1, 2, 3])
    def test_i0_kills_vacuum_module(self, vac, degree):
        for mono in enumerate_basis(vac, degree):
            assert act(I(0), PBWVector(vac, {mono: scalar(1)})).is_zero()

    def test_verma_l1_on_i_minus_1(self, verma):
        v = PBWVector.monomial(verma, (I(-1),))
        expected = verma.h2 - 2 * verma.l2
        assert act(L(1), v) == PBWVector.vacuum(verma).scale(expected)

    def test_verma_character(self, verma):
        hw = PBWVector.vacuum(verma)
        assert act(L(0), hw) == hw.scale(verma.h1)
        assert act(I(0), hw) == hw.scale(verma.h2)
        assert act(L(-1), hw) == PBWVector.monomial(verma, (L(-1),))

    def test_reordering_produces_bracket_term(self, vac):
        v = PBWVector.monomial(vac, (I(-1),))
        out = act(L(-2), v)
        assert out == PBWVector.combine(vac, [((I(-1), L(-2)), scalar(1)), ((I(-3),), scalar(1))])

    def test_central_acts_by_level(self, vac):
        v = PBWVector.monomial(vac, (L(-3),))
        assert act(central(AlgebraId.HV1, "C3"), v) == v.scale(scalar(5))

    def test_wrong_algebra(self, vac):
        with pytest.raises(ModuleMismatchError, match="frak1"):
            act(Lbar(0), PBWVector.vacuum(vac))

    def test_virasoro_sector_rejects_i(self):
        vir = ModuleSpec.build("VacuumVir", l1=1)
        with pytest.raises(ModuleMismatchError, match="Virasoro"):
            act(I(-1), PBWVector.vacuum(vir))

    def test_non_canonical_monomial_rejected(self, vac):
        with pytest.raises(ModuleMismatchError, match="canonical"):
            PBWVector.monomial(vac, (L(-2), I(-1)))

    def test_grading(self, vac):
        for n in range(-3, 4):
            for mono in enumerate_basis(vac, 3):
                out = act(L(n), PBWVector(vac, {mono: scalar(1)}))
                assert out.degrees() <= {3 - n}


class TestApplyWord:
    """Composition of actions."""

    def test_empty_word(self, vac):
        v = PBWVector.monomial(vac, (I(-2),))
        assert apply_word([], v) == v

    def test_l2_l_minus_2(self, vac):
        out = apply_word([L(2), L(-2)], PBWVector.vacuum(vac))
        assert out == PBWVector.vacuum(vac).scale(parse_scalar("3/4"))

    def test_wick_count(self, vac):
        out = apply_word([I(1), I(1), I(-1), I(-1)], PBWVector.vacuum(vac))
        assert out == PBWVector.vacuum(vac).scale(scalar(50))


def _module_axiom_holds(spec, gens, degrees):
    for d in degrees:
        for mono in enumerate_basis(spec, d):
            v = PBWVector(spec, {mono: scalar(1)})
            for g1 in gens:
                for g2 in gens:
                    lhs = act(g2, act(g1, v)) - act(g1, act(g2, v))
                    rhs = act_element(bracket(g2, g1), v)
                    if lhs != rhs:
                        return (g1, g2, mono)
    return None


class TestModuleAxiom:
    """[g2, g1] acts as the commutator of the actions."""

    def test_vacuum_hv1(self, vac):
        assert _module_axiom_holds(vac, generators(AlgebraId.HV1, 4), range(6)) is None

    def test_verma_hv1(self, verma):
        assert _module_axiom_holds(verma, generators(AlgebraId.HV1, 3), range(3)) is None

    def test_vacuum_frak1(self):
        spec = ModuleSpec.build("VacuumFRAK1", l1=2, l2=-1, l3=3)
        assert _module_axiom_holds(spec, generators(AlgebraId.FRAK1, 3), range(4)) is None

    def test_vacuum_frak2hat(self):
        spec = ModuleSpec.build("VacuumFRAK2HAT", l1=1, l2=2, l3=-1, l4=3, m_bound=1)
        gens = generators(AlgebraId.FRAK2HAT, 2, outer=1)
        assert _module_axiom_holds(spec, gens, range(2)) is None

    def test_induced_hv2(self):
        spec = ModuleSpec.build("InducedHV2", l1=1, l2=2, l3=-1, l4=3)
        gens = [T(1, 0), E(-1, 0), T(0, 1), E(0, -1), T(1, -1), E(-1, 2), E(1, 1)]
        vectors = [
            PBWVector.vacuum(spec),
            act(E(0, -1), PBWVector.vacuum(spec)),
            act(T(1, -1), act(E(-1, 0), PBWVector.vacuum(spec))),
        ]
        for v in vectors:
            for g1 in gens:
                for g2 in gens:
                    lhs = act(g2, act(g1, v)) - act(g1, act(g2, v))
                    assert lhs == act_element(bracket(g2, g1), v), (g1, g2, v)


class TestDerivation:
    """The translation derivation."""

    def test_d_vacuum(self, vac):
        assert d_action(PBWVector.vacuum(vac)).is_zero()

    def test_d_l_minus_2(self, vac):
        v = PBWVector.monomial(vac, (L(-2),))
        assert d_action(v) == PBWVector.monomial(vac, (L(-3),))

    def test_d_i_minus_1(self, vac):
        v = PBWVector.monomial(vac, (I(-1),))
        assert d_action(v) == PBWVector.monomial(vac, (I(-2),))

    @pytest.mark.parametrize("n", [-2, -1, 0, 1, 2, 3])
    def test_commutes_like_derivative(self, vac, n):
        for d in range(4):
            for mono in enumerate_basis(vac, d):
                v = PBWVector(vac, {mono: scalar(1)})
                lhs = d_action(act(L(n), v)) - act(L(n), d_action(v))
                assert lhs == act(L(n - 1), v).scale(scalar(-(n + 1)))

    def test_frak1_rule(self):
        spec = ModuleSpec.build("VacuumFRAK1")
        v = PBWVector.monomial(spec, (Lbar(-1),))
        assert d_action(v) == PBWVector.monomial(spec, (Lbar(-2),))

    def test_verma_rejected(self, verma):
        with pytest.raises(ModuleMismatchError, match="vacuum"):
            d_action(PBWVector.vacuum(verma))


class TestSpec:
    """Module parameter validation and serialization."""

    def test_json_round_trip(self, verma):
        v = act(L(-1), act(I(-2), PBWVector.vacuum(verma)))
        assert PBWVector.from_json(v.to_json()) == v

    def test_unknown_kind_suggests(self):
        with pytest.raises(ModuleMismatchError, match="did you mean 'VermaHV1'"):
            ModuleSpec.build("VermHV1")

    def test_weights_only_on_verma(self):
        with pytest.raises(ModuleMismatchError, match="VermaHV1"):
            ModuleSpec.build("VacuumHV1", h1=1)

    def test_lie_element_action(self, vac):
        x = LieElt.of(L(-2)) + LieElt.of(I(-2), scalar(2))
        out = act_element(x, PBWVector.vacuum(vac))
        assert out.coefficient((I(-2),)) == scalar(2)
        assert out.coefficient((L(-2),)) == scalar(1)
