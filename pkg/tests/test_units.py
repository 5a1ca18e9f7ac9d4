
import pytest

from gring.closure import (
    closure_equals_unit_set,
    group_ring_closure,
    unit_count,
)
from gring.decomp import decompose
from gring.groupring import GroupRing, unit_order
from gring.groups import abelian, cyclic, dicyclic, dihedral, extraspecial27, symmetric
from gring.modring import PrimePower
from gring.units import (
    build_matrix_units,
    certify_closure,
    diagonal_generators,
    elementary_generators,
    expected_unit_group_order,
    fixture_closure_order,
    involution_fixture,
    unit_group_generators,
    z2r_c5_fixture,
)


@pytest.fixture(scope="module")
def es27_comp():
    comps = decompose(extraspecial27(), 2, 3)
    return next(c for c in comps if c.matrix_size == 3)


@pytest.fixture(scope="module")
def s3_comp():
    comps = decompose(symmetric(3), 5, 2)
    return next(c for c in comps if c.matrix_size == 2)


class TestMatrixUnits:
    def test_size_one_kit_is_w(self):
        comps = decompose(cyclic(5), 2, 3)
        for comp in comps:
            kit = build_matrix_units(comp)
            assert kit.size == 1
            assert kit.units[(0, 0)] == comp.structure().w

    def test_es27_relations_exhaustive(self, es27_comp):
        kit = build_matrix_units(es27_comp)
        assert kit.verify_relations()

    def test_s3_relations_exhaustive(self, s3_comp):
        kit = build_matrix_units(s3_comp)
        assert kit.verify_relations()

    def test_es27_units_live_in_transversal_form(self, es27_comp):
        # the kit entries are b^k omega b^{-l}-style elements: E_PP sums to w
        kit = build_matrix_units(es27_comp)
        cs = es27_comp.structure()
        total = cs.ring_g.zero
        for i in range(3):
            total = total + kit.units[(i, i)]
        assert total == cs.w


class TestElementary:
    def test_inverse_law(self, es27_comp):
        for gen in elementary_generators(es27_comp)[:12]:
            assert gen.verify()

    def test_squares_to_shift(self, s3_comp):
        # (1 + sE)(1 - sE) = 1 for off-diagonal E
        for gen in elementary_generators(s3_comp):
            assert gen.verify()

    def test_commutator_pattern(self, es27_comp):
        # [1+E01, 1+E12] = 1+E02 in the embedded picture
        kit = build_matrix_units(es27_comp)
        cs = es27_comp.structure()
        one = cs.ring_g.one
        a = one + kit.units[(0, 1)]
        b = one + kit.units[(1, 2)]
        ainv = one - kit.units[(0, 1)]
        binv = one - kit.units[(1, 2)]
        comm = a * b * ainv * binv
        assert comm == one + kit.units[(0, 2)]

    def test_count(self, es27_comp):
        gens = elementary_generators(es27_comp)
        # (n^2 - n) positions x (r*m) additive generators
        assert len(gens) == 6 * (3 * 2)

    def test_every_position_nontrivial_and_exact(self, es27_comp):
        # regression: off-block positions must not collapse to the identity
        cs = es27_comp.structure()
        one = cs.ring_g.one
        gens = elementary_generators(es27_comp)
        for gen in gens:
            assert gen.element != one
            assert unit_order(gen.element) == gen.declared_order

    def test_embedding_of_elementary_is_identity_plus_unit(self, es27_comp):
        # embed(1 + s E_PQ) = I + s at (P, Q), checked at a corner position
        kit = build_matrix_units(es27_comp)
        cs = es27_comp.structure()
        s = cs.s_ring.xi
        elem = cs.ring_g.one + cs.scalar_in_component(s) * kit.units[(2, 0)]
        mat = cs.embed(elem)
        for i in range(3):
            for j in range(3):
                if (i, j) == (2, 0):
                    assert mat[i][j] == s
                elif i == j:
                    assert mat[i][j] == cs.s_ring.one
                else:
                    assert mat[i][j] == cs.s_ring.zero

    def test_scalar_in_component_is_diagonal(self, es27_comp):
        cs = es27_comp.structure()
        s = cs.s_ring.elem([1, 2])
        mat = cs.embed(cs.scalar_in_component(s))
        for i in range(3):
            for j in range(3):
                assert mat[i][j] == (s if i == j else cs.s_ring.zero)


class TestDiagonal:
    def test_orders_match_coefficient_ring(self, es27_comp):
        for gen in diagonal_generators(es27_comp):
            assert unit_order(gen.element) == gen.declared_order

    def test_identity_for_u_one(self, s3_comp):
        cs = s3_comp.structure()
        kit = build_matrix_units(s3_comp)
        e00 = kit.units[(0, 0)]
        one = cs.ring_g.one
        u = cs.s_ring.one
        assert one - e00 + cs.s_to_conc(u) * e00 == one

    def test_es27_diagonal_order_multiset(self, es27_comp):
        # U(GR(8,2)) = C3 x C4 x C2 x C2: our superset generating list hits
        # orders {3, 4, 2, ...}
        orders = sorted(g.declared_order for g in diagonal_generators(es27_comp))
        assert orders == [2, 2, 2, 2, 3, 4]


class TestSynthesis:
    def test_f3c2_closure(self):
        g = cyclic(2)
        comps, gens = unit_group_generators(g, 3, 1)
        ring = GroupRing(g, PrimePower(3, 1))
        codes = group_ring_closure(ring, [x.element for x in gens])
        assert codes.size == 4  # C2 x C2

    def test_c5_z4_closure_against_unit_set(self):
        g = cyclic(5)
        comps, gens = unit_group_generators(g, 2, 2)
        ring = GroupRing(g, PrimePower(2, 2))
        codes = group_ring_closure(ring, [x.element for x in gens])
        assert codes.size == 480
        assert closure_equals_unit_set(ring, codes)

    def test_expected_order_formula_matches_oracle(self):
        for g, p, r in [(cyclic(5), 2, 2), (symmetric(3), 5, 1), (dihedral(8), 3, 1)]:
            comps = decompose(g, p, r)
            assert expected_unit_group_order(comps) == unit_count(g, PrimePower(p, r))

    def test_all_generators_verified(self):
        comps, gens = unit_group_generators(dihedral(10), 3, 2)
        assert all(g.verify() for g in gens)

    def test_certify_small(self):
        g = cyclic(3)
        comps, gens = unit_group_generators(g, 2, 2)
        ring = GroupRing(g, PrimePower(2, 2))
        res = certify_closure(ring, gens, expected_unit_group_order(comps))
        assert res["certified"] and res["closure_order"] == 24

    def test_certify_above_cap_is_honest(self):
        g = symmetric(3)
        comps, gens = unit_group_generators(g, 5, 2)
        ring = GroupRing(g, PrimePower(5, 2))
        res = certify_closure(ring, gens, expected_unit_group_order(comps), cap=100)
        assert not res["certified"]
        assert "not certified" in res["status"]
        assert res["generators_verified"]


class TestFixture:
    def test_r1(self):
        gens, notes = z2r_c5_fixture(1)
        assert len(gens) == 1 and not notes
        assert unit_order(gens[0].element) == 15
        # U(F_2 C5) is the cyclic group generated by it
        ring = gens[0].element.ring
        codes = group_ring_closure(ring, [gens[0].element])
        assert codes.size == 15
        assert closure_equals_unit_set(ring, codes)

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_declared_orders(self, r):
        gens, notes = z2r_c5_fixture(r)
        assert [unit_order(g.element) for g in gens] == [g.declared_order for g in gens]
        assert not notes  # normalized hat reading holds for r <= 4

    def test_r2_order_product(self):
        gens, _ = z2r_c5_fixture(2)
        prod = 1
        for g in gens:
            prod *= g.declared_order
        assert prod == 480

    @pytest.mark.parametrize("r", [2, 3])
    def test_closure_order(self, r):
        gens, _ = z2r_c5_fixture(r)
        ring = gens[0].element.ring
        codes = group_ring_closure(ring, [g.element for g in gens])
        assert codes.size == fixture_closure_order(r)
        assert closure_equals_unit_set(ring, codes)

    def test_closure_order_r4(self):
        # beyond the stated range but still under the certification cap
        gens, _ = z2r_c5_fixture(4)
        prod = 1
        for g in gens:
            prod *= g.declared_order
        assert prod == fixture_closure_order(4) == 491520
        ring = gens[0].element.ring
        codes = group_ring_closure(ring, [g.element for g in gens])
        assert codes.size == 491520
        assert closure_equals_unit_set(ring, codes)

    def test_involution_layer_r4(self):
        elems = involution_fixture(4)
        ring = elems[0].ring
        assert all(unit_order(x) == 2 for x in elems)
        codes = group_ring_closure(ring, elems)
        assert codes.size == 32  # elementary abelian of rank 5
        from gring.closure import decode_group_ring_codes

        decoded = decode_group_ring_codes(ring, codes)
        assert sum(1 for x in decoded if unit_order(x) == 2) == 31


class TestOracleEquivalenceSmall:
    @pytest.mark.parametrize(
        "maker,p,r",
        [
            (lambda: cyclic(3), 2, 2),
            (lambda: cyclic(5), 2, 2),
            (lambda: cyclic(7), 2, 2),
            (lambda: cyclic(2), 3, 2),
            (lambda: cyclic(4), 3, 2),
            (lambda: abelian([2, 2]), 3, 2),
            # nonabelian: crossed-product component (M_2 over F_9)
            (lambda: dihedral(10), 3, 1),
            # nonabelian: M_2(F_3) from a quaternion component
            (lambda: dicyclic(8), 3, 1),
            # nonabelian, two conjugate blocks: M_2(F_7) via the block map
            (lambda: symmetric(3), 7, 1),
        ],
    )
    def test_closure_equals_exhaustive_unit_set(self, maker, p, r):
        g = maker()
        comps, gens = unit_group_generators(g, p, r)
        ring = GroupRing(g, PrimePower(p, r))
        codes = group_ring_closure(ring, [x.element for x in gens], cap=2**20)
        assert codes is not None
        assert closure_equals_unit_set(ring, codes)
