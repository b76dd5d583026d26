"""Tests for root data, Weyl groups and weight representations"""
import pytest
from hypothesis import given, settings, strategies as st

from src.core.lie import (
    CartanMatrixError, NotRealizableError, RankMismatchError, WeightRep,
    WeylEnumerationError, adjoint_rep, all_roots, cotangent, defining_rep,
    direct_sum, dominant_coweights, dominant_shell, dual, factor_datum,
    is_symplectic_weights, is_weyl_invariant, lift, make_root_datum, product,
    reconstruct_from_isotypic, scale, sl2_irrep, sl2_isotypic_decomposition,
    sl2_symplectic_criterion, tensor, weight_level_cotangent_split,
    weights_rep, weyl_elements,
)
from src.utils.validation import ValidationError


SL2 = make_root_datum("SL", 2)


def reps_equal(a: WeightRep, b: WeightRep) -> bool:
    return a.rank == b.rank and a.entries == b.entries


class TestRootDatum:
    """Test preset and explicit root data"""

    def test_sl2_preset(self):
        """Test SL(2) in the coroot basis"""
        assert SL2.rank == 1
        assert SL2.simple_roots == ((2,),)
        assert SL2.simple_coroots == ((1,),)
        assert SL2.cartan_matrix == ((2,),)
        assert SL2.name == "SL(2)"

    def test_pgl2_preset(self):
        """Test PGL(2) in the coweight basis"""
        pgl2 = make_root_datum("PGL", 2)
        assert pgl2.simple_roots == ((1,),)
        assert pgl2.simple_coroots == ((2,),)
        assert pgl2.cartan_matrix == ((2,),)

    def test_sp4_cartan_matrix(self):
        """Test A_ij = <alpha_i, alpha_j^v> for Sp(4)"""
        sp4 = make_root_datum("Sp", 4)
        assert sp4.cartan_matrix == ((2, -1), (-2, 2))

    def test_so5_is_dual_to_sp4(self):
        """Test that SO(5) has the transposed Cartan matrix of Sp(4)"""
        so5 = make_root_datum("SO", 5)
        assert so5.cartan_matrix == ((2, -2), (-1, 2))

    def test_type_a_presets_share_cartan_matrix(self):
        """Test SL(3), PGL(3) and GL(3)"""
        expected = ((2, -1), (-1, 2))
        assert make_root_datum("SL", 3).cartan_matrix == expected
        assert make_root_datum("PGL", 3).cartan_matrix == expected
        gl3 = make_root_datum("GL", 3)
        assert gl3.rank == 3
        assert gl3.cartan_matrix == expected

    def test_torus(self):
        """Test that a torus has no roots"""
        torus = make_root_datum("Torus", 2)
        assert torus.rank == 2
        assert torus.semisimple_rank == 0
        assert torus.cartan_matrix == ()

    def test_so2_is_a_torus(self):
        """Test SO(2)"""
        so2 = make_root_datum("SO", 2)
        assert so2.rank == 1
        assert so2.semisimple_rank == 0

    def test_unknown_preset(self):
        """Test unknown preset names"""
        with pytest.raises(ValidationError) as exc_info:
            make_root_datum("G", 2)
        assert "Invalid preset" in str(exc_info.value)

    def test_explicit_datum(self):
        """Test explicit roots and coroots"""
        datum = make_root_datum(simple_roots=[[2, -1], [-1, 2]], simple_coroots=[[1, 0], [0, 1]])
        assert datum.rank == 2
        assert datum.cartan_matrix == make_root_datum("SL", 3).cartan_matrix

    def test_explicit_positive_off_diagonal(self):
        """Test rejection of a positive off-diagonal entry"""
        with pytest.raises(CartanMatrixError) as exc_info:
            make_root_datum(simple_roots=[[2, -1], [1, 2]], simple_coroots=[[1, 0], [0, 1]])
        assert "off-diagonal" in str(exc_info.value)

    def test_explicit_bad_diagonal(self):
        """Test rejection of <alpha, alpha^v> != 2"""
        with pytest.raises(CartanMatrixError) as exc_info:
            make_root_datum(simple_roots=[[1]], simple_coroots=[[1]])
        assert "expected 2" in str(exc_info.value)

    def test_explicit_asymmetric_zeros(self):
        """Test rejection of A_ij = 0 with A_ji != 0"""
        with pytest.raises(CartanMatrixError) as exc_info:
            make_root_datum(simple_roots=[[2, 0], [-1, 2]], simple_coroots=[[1, 0], [0, 1]])
        assert "both or neither" in str(exc_info.value)

    def test_explicit_count_mismatch(self):
        """Test different numbers of roots and coroots"""
        with pytest.raises(CartanMatrixError):
            make_root_datum(simple_roots=[[2]], simple_coroots=[])

    def test_explicit_needs_rank_without_roots(self):
        """Test an explicit datum with no vectors and no rank"""
        with pytest.raises(ValidationError):
            make_root_datum(simple_roots=[], simple_coroots=[])
        assert make_root_datum(simple_roots=[], simple_coroots=[], rank=3).rank == 3

    def test_explicit_wrong_vector_length(self):
        """Test vectors that do not match the rank"""
        with pytest.raises(RankMismatchError):
            make_root_datum(simple_roots=[[2, 0]], simple_coroots=[[1]], rank=2)

    def test_simple_reflection(self):
        """Test s(lambda) = lambda - <alpha, lambda> alpha^v"""
        s = SL2.simple_reflection(0)
        assert s.matrix == ((-1,),)
        assert (s @ s).is_identity()
        assert SL2.reflect_weight(0, (1,)) == (-1,)

    def test_check_vector(self):
        """Test lattice membership of coweights"""
        assert SL2.check_vector([3]) == (3,)
        with pytest.raises(RankMismatchError):
            SL2.check_vector([1, 2])


class TestProducts:
    """Test products of root data"""

    def test_product_blocks(self):
        """Test Sp(4) x SO(4)"""
        datum = product(make_root_datum("Sp", 4), make_root_datum("SO", 4))
        assert datum.rank == 4
        assert datum.name == "Sp(4) x SO(4)"
        assert [f.offset for f in datum.factors] == [0, 2]
        assert datum.cartan_matrix == (
            (2, -1, 0, 0),
            (-2, 2, 0, 0),
            (0, 0, 2, 0),
            (0, 0, 0, 2),
        )

    def test_product_with_rank_zero_torus(self):
        """Test that a rank-zero factor is dropped"""
        assert product(make_root_datum("Torus", 0), SL2) == SL2
        assert product(SL2, make_root_datum("Torus", 0)) == SL2

    def test_factor_datum(self):
        """Test cutting one factor out of a product"""
        datum = product(SL2, make_root_datum("PGL", 2))
        second = factor_datum(datum, 1)
        assert second.rank == 1
        assert second.simple_roots == ((1,),)
        assert second.simple_coroots == ((2,),)

    def test_factor_out_of_range(self):
        """Test asking for a missing factor"""
        with pytest.raises(ValidationError) as exc_info:
            factor_datum(SL2, 3)
        assert "has no factor 3" in str(exc_info.value)


class TestWeylGroup:
    """Test Weyl group enumeration and roots"""

    @pytest.mark.parametrize("preset,size,order", [
        ("SL", 2, 2),
        ("PGL", 2, 2),
        ("SL", 3, 6),
        ("GL", 3, 6),
        ("Sp", 4, 8),
        ("SO", 5, 8),
        ("SO", 4, 4),
        ("SO", 6, 24),
        ("SO", 8, 192),
        ("Sp", 6, 48),
        ("Torus", 2, 1),
    ])
    def test_weyl_orders(self, preset, size, order):
        """Test |W| for the presets"""
        assert len(weyl_elements(make_root_datum(preset, size))) == order

    def test_identity_first(self):
        """Test that enumeration starts at the identity"""
        elements = weyl_elements(make_root_datum("Sp", 4))
        assert elements[0].is_identity()
        assert len(set(elements)) == len(elements)

    def test_product_weyl_order(self):
        """Test |W(G x H)| = |W(G)| |W(H)|"""
        datum = product(make_root_datum("Sp", 4), make_root_datum("SO", 4))
        assert len(weyl_elements(datum)) == 32

    def test_infinite_weyl_group(self):
        """Test that an affine Cartan matrix hits the enumeration cap"""
        affine = make_root_datum(simple_roots=[[2, -2], [-2, 2]], simple_coroots=[[1, 0], [0, 1]])
        with pytest.raises(WeylEnumerationError) as exc_info:
            weyl_elements(affine, cap=50)
        assert "exceeds 50 elements" in str(exc_info.value)

    @pytest.mark.parametrize("preset,size,count", [
        ("SL", 2, 2), ("SL", 3, 6), ("Sp", 4, 8), ("SO", 5, 8), ("SO", 4, 4), ("Torus", 3, 0),
    ])
    def test_root_counts(self, preset, size, count):
        """Test the number of roots"""
        assert len(all_roots(make_root_datum(preset, size))) == count

    def test_sl3_roots(self):
        """Test the highest root of SL(3)"""
        roots = all_roots(make_root_datum("SL", 3))
        assert (1, 1) in roots
        assert (-1, -1) in roots

    def test_dominant_coweights(self):
        """Test dominant coweights of SL(2) in a box"""
        assert dominant_coweights(SL2, 3) == [(0,), (1,), (2,), (3,)]

    def test_dominant_shell(self):
        """Test shells of dominant coweights"""
        sp4 = make_root_datum("Sp", 4)
        assert dominant_shell(sp4, 0) == [(0, 0)]
        assert dominant_shell(sp4, 1) == [(1, 0), (1, 1)]
        assert dominant_shell(SL2, 2) == [(2,)]

    def test_dominant_shell_rank_zero(self):
        """Test that a rank-zero datum has only the origin"""
        point = make_root_datum("Torus", 0)
        assert dominant_shell(point, 0) == [()]
        assert dominant_shell(point, 1) == []


class TestRepresentations:
    """Test weight-multiset builders"""

    def test_sl2_irreps(self):
        """Test V^k weights"""
        assert sl2_irrep(3).entries == (((-3,), 1), ((-1,), 1), ((1,), 1), ((3,), 1))
        assert sl2_irrep(0).entries == (((0,), 1),)
        assert sl2_irrep(4).dimension == 5

    def test_sl2_irrep_on_pgl2(self):
        """Test that only even V^k descend to PGL(2)"""
        pgl2 = make_root_datum("PGL", 2)
        assert sl2_irrep(2, pgl2).entries == (((-1,), 1), ((0,), 1), ((1,), 1))
        with pytest.raises(ValidationError) as exc_info:
            sl2_irrep(1, pgl2)
        assert "does not descend" in str(exc_info.value)

    def test_defining_reps(self):
        """Test defining representations"""
        sl3 = make_root_datum("SL", 3)
        assert defining_rep(sl3).weights == [(-1, 1), (0, -1), (1, 0)]

        sp4 = make_root_datum("Sp", 4)
        assert defining_rep(sp4).weights == [(-1, 0), (0, -1), (0, 1), (1, 0)]

        so5 = make_root_datum("SO", 5)
        assert defining_rep(so5).dimension == 5
        assert defining_rep(so5).multiplicity((0, 0)) == 1

    def test_pgl_has_no_defining_rep(self):
        """Test PGL(n)"""
        with pytest.raises(ValidationError) as exc_info:
            defining_rep(make_root_datum("PGL", 3))
        assert "adjoint" in str(exc_info.value)

    @pytest.mark.parametrize("preset,size,dim", [
        ("SL", 2, 3), ("SL", 3, 8), ("Sp", 4, 10), ("SO", 5, 10), ("SO", 4, 6), ("PGL", 3, 8),
    ])
    def test_adjoint_dimension(self, preset, size, dim):
        """Test dim of the adjoint representation"""
        datum = make_root_datum(preset, size)
        rep = adjoint_rep(datum)
        assert rep.dimension == dim
        assert is_weyl_invariant(datum, rep)

    @pytest.mark.parametrize("preset,size", [("SL", 3), ("GL", 3), ("Sp", 6), ("SO", 5), ("SO", 6)])
    def test_defining_is_weyl_invariant(self, preset, size):
        """Test Weyl invariance of defining representations"""
        datum = make_root_datum(preset, size)
        assert is_weyl_invariant(datum, defining_rep(datum))

    def test_tensor(self):
        """Test V^1 x V^1 = V^2 + V^0"""
        v1 = sl2_irrep(1)
        assert reps_equal(tensor(v1, v1), direct_sum(sl2_irrep(2), sl2_irrep(0)))

    def test_dual_and_cotangent(self):
        """Test N* and T*N"""
        sl3 = make_root_datum("SL", 3)
        fundamental = defining_rep(sl3)
        assert dual(fundamental).weights == [(-1, 0), (0, 1), (1, -1)]
        assert cotangent(fundamental).dimension == 6

    def test_scale(self):
        """Test V x C^m"""
        rep = scale(sl2_irrep(1), 3)
        assert rep.multiplicity((1,)) == 3
        assert scale(sl2_irrep(1), 0).entries == ()
        with pytest.raises(ValidationError):
            scale(sl2_irrep(1), -1)

    def test_lift_into_product(self):
        """Test the bifundamental of Sp(4) x SO(4)"""
        datum = product(make_root_datum("Sp", 4), make_root_datum("SO", 4))
        bifundamental = tensor(defining_rep(datum, 0), defining_rep(datum, 1))
        assert bifundamental.dimension == 16
        assert bifundamental.multiplicity((1, 0, 0, -1)) == 1
        assert is_weyl_invariant(datum, bifundamental)

    def test_lift_rank_mismatch(self):
        """Test lifting a representation of the wrong rank"""
        datum = product(SL2, make_root_datum("Sp", 4))
        with pytest.raises(RankMismatchError):
            lift(sl2_irrep(1), datum, 1)

    def test_rank_mismatches(self):
        """Test combining representations of different ranks"""
        with pytest.raises(RankMismatchError):
            direct_sum(sl2_irrep(1), defining_rep(make_root_datum("Sp", 4)))
        with pytest.raises(RankMismatchError):
            tensor(sl2_irrep(1), defining_rep(make_root_datum("Sp", 4)))
        with pytest.raises(RankMismatchError):
            WeightRep.from_pairs(1, [((1, 0), 1)])

    def test_weights_rep_requires_invariance(self):
        """Test explicit weights that are not Weyl invariant"""
        with pytest.raises(ValidationError) as exc_info:
            weights_rep(SL2, [((1,), 1)])
        assert "not invariant" in str(exc_info.value)
        assert weights_rep(SL2, [((1,), 2), ((-1,), 2)]).dimension == 4

    def test_from_pairs_merges(self):
        """Test merging of repeated weights"""
        rep = WeightRep.from_pairs(1, [((1,), 1), ((1,), 2), ((0,), 0)])
        assert rep.entries == (((1,), 3),)


class TestSymplecticChecks:
    """Test weight-level symplecticity and cotangent splittings"""

    def test_v1_is_symplectic(self):
        """Test V^1"""
        check = is_symplectic_weights(SL2, sl2_irrep(1))
        assert check.ok
        assert bool(check)

    def test_v2_is_not_symplectic(self):
        """Test V^2: odd dimension and odd zero multiplicity"""
        check = is_symplectic_weights(SL2, sl2_irrep(2))
        assert not check.ok
        assert any("odd" in v for v in check.violations)

    def test_asymmetric_weights(self):
        """Test a multiset that is not closed under negation"""
        torus = make_root_datum("Torus", 1)
        check = is_symplectic_weights(torus, WeightRep.from_pairs(1, [((1,), 2)]))
        assert not check.ok

    def test_cotangent_split(self):
        """Test N with T*N = rep"""
        sp4 = make_root_datum("Sp", 4)
        split = weight_level_cotangent_split(defining_rep(sp4))
        assert split.weights == [(0, 1), (1, 0)]

    def test_cotangent_split_round_trip(self):
        """Test that the split of T*N reproduces T*N"""
        rep = cotangent(defining_rep(make_root_datum("SL", 3)))
        split = weight_level_cotangent_split(rep)
        assert split is not None
        assert reps_equal(cotangent(split), rep)

    def test_no_cotangent_split(self):
        """Test odd zero multiplicity"""
        assert weight_level_cotangent_split(sl2_irrep(2)) is None


class TestSl2Decomposition:
    """Test SL(2) isotypic decompositions"""

    def test_peel_from_the_top(self):
        """Test {+-1, +-1, 2, 0, 0, -2}"""
        rep = WeightRep.from_pairs(1, [((1,), 2), ((-1,), 2), ((2,), 1), ((0,), 2), ((-2,), 1)])
        assert sl2_isotypic_decomposition(rep) == {0: 1, 1: 2, 2: 1}

    def test_without_trivial_summand(self):
        """Test {+-1, +-1, 2, 0, -2}"""
        rep = WeightRep.from_pairs(1, [((1,), 2), ((-1,), 2), ((2,), 1), ((0,), 1), ((-2,), 1)])
        assert sl2_isotypic_decomposition(rep) == {1: 2, 2: 1}

    def test_not_realizable(self):
        """Test a multiset missing the zero weight"""
        rep = WeightRep.from_pairs(1, [((2,), 1), ((-2,), 1)])
        with pytest.raises(NotRealizableError) as exc_info:
            sl2_isotypic_decomposition(rep)
        assert "V^2" in str(exc_info.value)

    def test_pgl2_values_use_the_coroot(self):
        """Test that PGL(2) weights are measured against alpha^v = 2"""
        pgl2 = make_root_datum("PGL", 2)
        assert sl2_isotypic_decomposition(adjoint_rep(pgl2), pgl2) == {2: 1}

    def test_symplectic_criterion(self):
        """Test dim M^k even for even k"""
        assert sl2_symplectic_criterion({1: 3, 2: 2})
        assert not sl2_symplectic_criterion({0: 1, 2: 1})
        assert sl2_symplectic_criterion({})

    @settings(derandomize=True, max_examples=60, deadline=None)
    @given(st.dictionaries(st.integers(0, 6), st.integers(1, 3), max_size=5))
    def test_reconstruct_round_trip(self, decomposition):
        """Test that peeling recovers the isotypic components"""
        rep = reconstruct_from_isotypic(decomposition)
        assert sl2_isotypic_decomposition(rep) == dict(sorted(decomposition.items()))

    @settings(derandomize=True, max_examples=60, deadline=None)
    @given(st.dictionaries(st.integers(0, 6), st.integers(1, 3), max_size=5))
    def test_criterion_implies_weight_conditions(self, decomposition):
        """Test that a symplectic SL(2) module passes the weight-level check"""
        rep = reconstruct_from_isotypic(decomposition)
        if sl2_symplectic_criterion(decomposition):
            assert is_symplectic_weights(SL2, rep).ok
