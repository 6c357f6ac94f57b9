"""Tests for the Zhu algebra, Gram forms, unitarity, conformal and singular vectors."""

import random

import pytest
from sympy import QQ

from twisted_hv.liealg import I, L
from twisted_hv.pbwmod import ModuleMismatchError, ModuleSpec, PBWVector, act, graded_dim
from twisted_hv.scalars import IMAG, ONE, parse_scalar, scalar
from twisted_hv.structure import (
    ZHU_RING,
    ZHU_X,
    ZHU_Y,
    ConformalName,
    NonVacuumError,
    Positivity,
    PreconditionError,
    c2_quotient_dim,
    central_charge,
    classify_symmetric,
    closed_form_central_charge,
    commutant_defect,
    conformal_vector,
    contravariance_defect,
    cpq,
    cpq_degree,
    discrete_series_index,
    discrete_weight,
    embed_via_omega_tilde,
    gram_matrix,
    gram_rank,
    is_positive,
    minimal_model_grid,
    o_relation,
    omega_prime_l1,
    phi_automorphism_defect,
    phi_involution,
    positivity_scan,
    singular_vector_search,
    tensor_dim_check,
    unitarity_classify,
    virasoro_defect,
    zhu_poly_to_json,
    zhu_product,
    zhu_reduce,
    zhu_relation_defect,
)
from twisted_hv.vertexops import TruncatedModule


@pytest.fixture
def vac():
    return ModuleSpec.build("VacuumHV1", l1="3/2", l2=2, l3=5)


@pytest.fixture
def real_verma():
    return ModuleSpec.build("VermaHV1", l1="3/2", l2=0, l3=5, h1="1/2", h2=3)


def state(spec, *mono, coef=ONE):
    return PBWVector(spec, {tuple(mono): coef})


def q(text):
    return parse_scalar(text)


class TestZhuReduce:
    """Reduction of vacuum vectors to C[x, y]."""

    def test_generators(self, vac):
        assert zhu_reduce(state(vac, L(-2))) == ZHU_X
        assert zhu_reduce(state(vac, I(-1))) == ZHU_Y
        assert zhu_reduce(PBWVector.vacuum(vac)) == ZHU_RING.one

    def test_heisenberg_square(self, vac):
        assert zhu_reduce(state(vac, I(-1), I(-1))) == ZHU_Y**2

    def test_i_minus_two(self, vac):
        assert zhu_reduce(state(vac, I(-2))) == -ZHU_Y

    def test_translation_of_i(self, vac):
        assert zhu_reduce(act(L(-1), state(vac, I(-1)))) == -ZHU_Y

    def test_non_vacuum_rejected(self, real_verma):
        with pytest.raises(NonVacuumError, match="VacuumHV1"):
            zhu_reduce(PBWVector.vacuum(real_verma))

    def test_json(self, vac):
        data = zhu_poly_to_json(zhu_reduce(state(vac, I(-1), I(-1))))
        assert data["terms"] == [{"x": 0, "y": 2, "coef": {"re": "1", "im": "0"}}]


class TestZhuProduct:
    """u * v = sum_i binom(wt u, i) u_(i-1) v."""

    def test_i_times_i(self, vac):
        i = state(vac, I(-1))
        assert zhu_product(i, i) == state(vac, I(-1), I(-1))

    def test_vacuum_is_unit(self, vac):
        v = state(vac, I(-2)) + state(vac, L(-2))
        assert zhu_product(PBWVector.vacuum(vac), v) == v

    def test_omega_times_i(self, vac):
        i = state(vac, I(-1))
        expected = act(L(-2), i) + act(L(-1), i).scale(scalar(2)) + act(L(0), i)
        assert zhu_product(state(vac, L(-2)), i) == expected
        assert zhu_reduce(expected) == ZHU_X * ZHU_Y

    def test_inhomogeneous_left_factor(self, vac):
        u = state(vac, I(-1)) + state(vac, L(-2))
        with pytest.raises(PreconditionError, match="homogeneous"):
            zhu_product(u, PBWVector.vacuum(vac))

    def test_morphism_property(self, vac):
        module = TruncatedModule(vac)
        basis = list(module.vectors(2))
        for u in basis:
            for v in basis:
                lhs = zhu_reduce(zhu_product(u, v))
                assert lhs == zhu_reduce(u) * zhu_reduce(v), (u, v)

    def test_generic_levels_commute(self):
        spec = ModuleSpec.build("VacuumHV1", l1="-7/3", l2="1/2", l3=-2)
        u, v = state(spec, L(-2)), state(spec, I(-1), I(-1))
        assert zhu_reduce(zhu_product(u, v)) == zhu_reduce(zhu_product(v, u))


class TestZhuRelations:
    """Generators of O(V) reduce to zero."""

    def test_spot_check(self, vac):
        assert zhu_relation_defect(vac, max_degree=2, max_m=1) == []

    def test_relation_precondition(self, vac):
        with pytest.raises(PreconditionError, match="m >= n"):
            o_relation(state(vac, I(-1)), PBWVector.vacuum(vac), 0, 1)


class TestGramMatrix:
    """Contravariant form by sigma-transfer."""

    def test_verma_degree_one(self, real_verma):
        gram = gram_matrix(real_verma, 1)
        assert gram.basis == ((I(-1),), (L(-1),))
        assert gram.entries == ((q("5"), q("3")), (q("3"), q("1")))

    def test_degree_one_determinant(self, real_verma):
        spec = real_verma
        expected = 2 * spec.h1 * spec.l3 - spec.h2 * spec.h2
        assert gram_matrix(spec, 1).determinant() == expected

    def test_vacuum_heisenberg_block(self, vac):
        gram = gram_matrix(vac, 2)
        index = {m: i for i, m in enumerate(gram.basis)}
        ii, i2 = index[(I(-1), I(-1))], index[(I(-2),)]
        assert gram.entries[ii][ii] == q("50")
        assert gram.entries[i2][i2] == q("10")
        assert not gram.entries[ii][i2]
        assert not gram.entries[i2][ii]

    def test_degree_zero(self, vac):
        assert gram_matrix(vac, 0).entries == ((ONE,),)
        assert gram_rank(vac, 0) == 1

    def test_l2_breaks_symmetry(self):
        spec = ModuleSpec.build("VermaHV1", l1=2, l2=1, l3=1, h1=1, h2=1)
        gram = gram_matrix(spec, 1)
        assert not gram.is_symmetric()
        assert gram.entries[1][0] == q("-1")

    @pytest.mark.parametrize("degree", [1, 2, 3])
    def test_symmetric_for_real_parameters(self, real_verma, degree):
        assert gram_matrix(real_verma, degree).is_symmetric()

    def test_contravariance(self, real_verma):
        assert contravariance_defect(real_verma, 1, window=1) == []

    def test_rejects_rank_two(self):
        spec = ModuleSpec.build("VacuumFRAK2HAT", l1=1, m_bound=1)
        with pytest.raises(ModuleMismatchError, match="hv1"):
            gram_matrix(spec, 1)

    def test_json_lists_basis(self, real_verma):
        data = gram_matrix(real_verma, 1).to_json()
        assert data["basis"] == ["I(-1)*1", "L(-1)*1"]
        assert data["entries"][0][0] == {"re": "5", "im": "0"}


class TestGramRank:
    """Rank of the form gives the graded dimension of the simple quotient."""

    def test_generic_nondegenerate(self):
        spec = ModuleSpec.build("VacuumHV1", l1=5, l2=0, l3=1)
        assert gram_rank(spec, 2) == 3

    def test_c_tilde_zero_drops(self):
        spec = ModuleSpec.build("VacuumHV1", l1=1, l2=0, l3=1)
        assert gram_rank(spec, 1) == 1
        assert gram_rank(spec, 2) == 2

    def test_drop_at_c25(self):
        spec = ModuleSpec.build("VacuumHV1", l1=scalar(1) + cpq(2, 5), l2=0, l3=1)
        for d in range(cpq_degree(2, 5)):
            assert gram_rank(spec, d) == graded_dim(spec, d)
        assert gram_rank(spec, 4) == graded_dim(spec, 4) - 1


class TestClassifySymmetric:
    """Exact symmetric elimination."""

    @pytest.mark.parametrize(
        "rows, expected",
        [
            ([[2, 1], [1, 2]], Positivity.DEFINITE),
            ([[0, 0], [0, 1]], Positivity.SEMIDEFINITE),
            ([[1, 1], [1, 1]], Positivity.SEMIDEFINITE),
            ([[0, 1], [1, 0]], Positivity.NOT_POSITIVE),
            ([[1, 2], [2, 1]], Positivity.NOT_POSITIVE),
            ([[-1]], Positivity.NOT_POSITIVE),
            ([], Positivity.DEFINITE),
        ],
    )
    def test_table(self, rows, expected):
        assert classify_symmetric([[QQ(x) for x in row] for row in rows]) == expected


class TestPositivity:
    """Per-degree positivity of the contravariant form."""

    def test_unitary_module(self):
        spec = ModuleSpec.build("VermaHV1", l1=2, l2=0, l3=1, h1=1, h2=0)
        verdicts = positivity_scan(spec, 3)
        assert is_positive(verdicts)
        assert [v.positivity for v in verdicts[:3]] == [Positivity.DEFINITE] * 3

    def test_negative_l3(self):
        spec = ModuleSpec.build("VacuumHV1", l1=2, l2=0, l3=-1)
        verdicts = positivity_scan(spec, 1)
        assert verdicts[1].positivity is Positivity.NOT_POSITIVE

    def test_weight_condition_violated(self):
        spec = ModuleSpec.build("VermaHV1", l1=2, l2=0, l3=1, h1=0, h2=1)
        verdicts = positivity_scan(spec, 1)
        assert verdicts[1].positivity is Positivity.NOT_POSITIVE
        assert gram_matrix(spec, 1).determinant() == q("-1")

    def test_requires_l2_zero(self):
        spec = ModuleSpec.build("VacuumHV1", l1=2, l2=1, l3=1)
        with pytest.raises(PreconditionError, match="l2 = 0"):
            positivity_scan(spec, 1)

    def test_requires_real_parameters(self):
        spec = ModuleSpec.build("VacuumHV1", l1="2+i", l2=0, l3=1)
        with pytest.raises(PreconditionError, match="real"):
            positivity_scan(spec, 1)

    def test_verdict_json(self):
        spec = ModuleSpec.build("VacuumHV1", l1=2, l2=0, l3=1)
        data = positivity_scan(spec, 1)[1].to_json()
        assert data == {"degree": 1, "dimension": 1, "rank": 1, "positivity": "definite"}


class TestUnitarity:
    """Closed-form classification."""

    def test_discrete_vacuum(self):
        verdict = unitarity_classify("1/2", 0, 0)
        assert verdict.unitary and verdict.case == "c_m" and verdict.m == 3
        assert verdict.to_json()["m"] == 3

    def test_shifted_discrete_vacuum(self):
        verdict = unitarity_classify("3/2", 0, 1)
        assert verdict.unitary and verdict.case == "1+c_m" and verdict.m == 3

    def test_continuum(self):
        verdict = unitarity_classify(2, 0, 1)
        assert verdict.unitary and verdict.case == "continuum"

    def test_l2_nonzero(self):
        verdict = unitarity_classify(2, 1, 1)
        assert not verdict.unitary
        assert "l2 = 0" in verdict.reason

    def test_below_threshold(self):
        assert not unitarity_classify("1/3", 0, 0).unitary

    def test_module_continuum(self):
        verdict = unitarity_classify(2, 0, 1, h1="1/2", h2=1)
        assert verdict.unitary and verdict.case == "continuum"

    def test_module_discrete(self):
        verdict = unitarity_classify("3/2", 0, 1, h1="1/16", h2=0)
        assert verdict.unitary
        assert (verdict.m, verdict.r, verdict.s) == (3, 2, 2)

    def test_module_needs_h2_zero_without_heisenberg(self):
        assert not unitarity_classify(1, 0, 0, h1=1, h2=1).unitary

    def test_module_weight_negative(self):
        assert not unitarity_classify(2, 0, 1, h1=0, h2=1).unitary

    def test_complex_rejected(self):
        with pytest.raises(PreconditionError, match="real"):
            unitarity_classify("1+i", 0, 0)

    def test_needs_both_weights(self):
        with pytest.raises(PreconditionError, match="both"):
            unitarity_classify(2, 0, 1, h1=1)

    @pytest.mark.parametrize(
        "c, m", [("0", 2), ("1/2", 3), ("7/10", 4), ("4/5", 5), ("1/3", None), ("1", None), ("-2", None)]
    )
    def test_discrete_series_index(self, c, m):
        assert discrete_series_index(parse_scalar(c).x) == m

    def test_discrete_weights(self):
        assert discrete_weight(3, 2, 1) == QQ(1, 2)
        assert discrete_weight(3, 2, 2) == QQ(1, 16)
        with pytest.raises(PreconditionError):
            discrete_weight(3, 1, 2)

    def test_agrees_with_positivity(self):
        grid = minimal_model_grid()
        assert len(grid) == 12
        for case in grid:
            verdict = case.classify()
            if case.l2 != "0":
                assert not verdict.unitary
                with pytest.raises(PreconditionError):
                    positivity_scan(case.spec(), 4)
                continue
            assert is_positive(positivity_scan(case.spec(), 4)) == verdict.unitary, case


class TestConformalVectors:
    """Central charges and Virasoro relations."""

    def test_omega(self, vac):
        assert central_charge(conformal_vector("omega", vac)) == vac.l1

    def test_omega_h(self):
        spec = ModuleSpec.build("VacuumHV1", l1=3, l2=1, l3=2)
        assert central_charge(conformal_vector("omega_H", spec)) == q("-5")

    def test_omega_tilde(self):
        spec = ModuleSpec.build("VacuumHV1", l1=1, l2=0, l3=1)
        assert not central_charge(conformal_vector("omega_tilde", spec))

    def test_random_levels(self):
        rng = random.Random(7)
        for _ in range(20):
            l1 = QQ(rng.randint(-9, 9), rng.randint(1, 5))
            l2 = QQ(rng.randint(-9, 9), rng.randint(1, 5))
            l3 = QQ(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 4))
            spec = ModuleSpec.build("VacuumHV1", l1=scalar(l1), l2=scalar(l2), l3=scalar(l3))
            for name in ConformalName:
                v = conformal_vector(name, spec)
                assert central_charge(v) == closed_form_central_charge(name, spec), (name, spec)

    def test_decomposition(self, vac):
        omega = conformal_vector("omega", vac).value
        heis = conformal_vector(ConformalName.OMEGA_H, vac).value
        tilde = conformal_vector(ConformalName.OMEGA_TILDE, vac).value
        assert heis + tilde == omega

    def test_needs_l3(self):
        spec = ModuleSpec.build("VacuumHV1", l1=1, l2=0, l3=0)
        with pytest.raises(PreconditionError, match="l3"):
            conformal_vector("omega_prime", spec)

    def test_unknown_name(self, vac):
        with pytest.raises(PreconditionError, match="unknown conformal vector"):
            conformal_vector("omega_tilda", vac)

    def test_non_vacuum(self, real_verma):
        with pytest.raises(NonVacuumError):
            conformal_vector("omega", real_verma)

    @pytest.mark.parametrize("name, max_degree", [("omega", 2), ("omega_H", 6), ("omega_tilde", 6)])
    def test_virasoro_relations(self, name, max_degree):
        spec = ModuleSpec.build("VacuumHV1", l1=3, l2=1, l3=2)
        assert virasoro_defect(conformal_vector(name, spec), window=2, max_degree=max_degree) == []

    def test_commutant(self):
        spec = ModuleSpec.build("VacuumHV1", l1=3, l2=1, l3=2)
        assert commutant_defect(spec, window=3, max_degree=1) == []

    def test_omega_prime_l1(self, vac):
        expected = state(vac, I(-1), coef=scalar(QQ(-4, 5)))
        assert omega_prime_l1(vac) == expected


class TestSingularVectors:
    """Kernels of L(1), L(2) in the Virasoro vacuum module."""

    @pytest.mark.parametrize("p, q_, c, degree", [(2, 3, "0", 2), (2, 5, "-22/5", 4), (3, 4, "1/2", 6)])
    def test_cpq(self, p, q_, c, degree):
        assert cpq(p, q_) == parse_scalar(c)
        assert cpq_degree(p, q_) == degree

    @pytest.mark.parametrize("p, q_", [(2, 4), (1, 3), (3, 3)])
    def test_cpq_rejects(self, p, q_):
        with pytest.raises(PreconditionError, match="coprime"):
            cpq(p, q_)

    def test_c_zero_degree_two(self):
        (v,) = singular_vector_search("0", 2)
        assert list(v.terms) == [(L(-2),)]

    def test_c25_degree_four(self):
        assert len(singular_vector_search("-22/5", 4)) == 1

    def test_generic_c_is_empty(self):
        assert singular_vector_search("7", 2) == []

    def test_degree_one_is_empty(self):
        assert singular_vector_search("0", 1) == []

    def test_embedding_via_omega_tilde(self):
        spec = ModuleSpec.build("VacuumHV1", l1=1, l2=0, l3=1)
        (v,) = singular_vector_search("0", 2)
        image, annihilated = embed_via_omega_tilde(v.scale(ONE / v.terms[(L(-2),)]), spec)
        assert annihilated
        assert image == conformal_vector("omega_tilde", spec).value

    def test_embedding_needs_matching_charge(self):
        spec = ModuleSpec.build("VacuumHV1", l1=3, l2=0, l3=1)
        (v,) = singular_vector_search("0", 2)
        with pytest.raises(PreconditionError, match="central charge"):
            embed_via_omega_tilde(v, spec)


class TestCounting:
    """Graded dimensions and the C_2 quotient."""

    def test_graded_dims(self, vac):
        assert [graded_dim(vac, n) for n in range(7)] == [1, 1, 3, 5, 10, 16, 29]

    def test_tensor_decomposition(self, vac):
        assert tensor_dim_check(vac, 12) == []

    def test_tensor_needs_l3(self):
        spec = ModuleSpec.build("VacuumHV1", l1=1, l2=0, l3=0)
        with pytest.raises(PreconditionError):
            tensor_dim_check(spec, 2)

    @pytest.mark.parametrize("degree, expected", [(0, 1), (1, 1), (2, 2), (3, 2), (4, 3)])
    def test_c2_quotient(self, vac, degree, expected):
        assert c2_quotient_dim(vac, degree) == expected

    def test_c2_non_vacuum(self, real_verma):
        with pytest.raises(NonVacuumError):
            c2_quotient_dim(real_verma, 1)


class TestPhi:
    """The anti-linear involution."""

    def test_examples(self, vac):
        assert phi_involution(state(vac, I(-1))) == state(vac, I(-1), coef=-ONE)
        assert phi_involution(state(vac, L(-2))) == state(vac, L(-2))
        v = state(vac, I(-2), I(-1), coef=IMAG)
        assert phi_involution(v) == state(vac, I(-2), I(-1), coef=-IMAG)

    def test_involution(self, vac):
        v = state(vac, I(-1), coef=scalar(1, 2)) + state(vac, I(-2), L(-2), coef=q("3/4"))
        assert phi_involution(phi_involution(v)) == v

    def test_automorphism_real(self):
        spec = ModuleSpec.build("VacuumHV1", l1="3/2", l2=0, l3=5)
        assert phi_automorphism_defect(spec, max_degree=2, window=2) == []

    def test_automorphism_imaginary_l2(self):
        spec = ModuleSpec.build("VacuumHV1", l1="3/2", l2="2*i", l3=5)
        assert phi_automorphism_defect(spec, max_degree=2, window=2) == []

    def test_real_l2_breaks_automorphism(self, vac):
        assert phi_automorphism_defect(vac, max_degree=1, window=2)

    def test_non_vacuum(self, real_verma):
        with pytest.raises(NonVacuumError):
            phi_involution(PBWVector.vacuum(real_verma))
