import pytest

from gring.groups import (
    GroupConstructionError,
    FiniteGroup,
    Subgroup,
    abelian,
    build_group,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    extraspecial27,
    from_cayley_table,
    from_permutations,
    is_cyclic,
    minimal_normal_over,
    normalizer,
    parse_cycles,
    quotient,
    right_transversal,
    semidirect_cyclic,
    symmetric,
)


class TestConstructors:
    def test_cyclic(self):
        g = cyclic(5)
        assert g.n == 5
        assert all(g.order_of(x) == 5 for x in range(1, 5))

    def test_extraspecial27(self):
        g = extraspecial27()
        assert g.n == 27
        assert g.center().order == 3
        assert g.names[g.center().elems[1]] in ("c", "c^2")
        assert all(g.order_of(x) in (1, 3) for x in range(27))
        # defining relation b^-1 a b = a c^-1
        ia, ib, ic = (g.names.index(s) for s in "abc")
        assert g.conj(ia, ib) == g.table[ia][g.inverse[ic]]

    def test_abelian_count_of_order5_elements(self):
        g = abelian([5, 5])
        assert sum(1 for x in range(g.n) if g.order_of(x) == 5) == 24

    def test_dihedral_dicyclic(self):
        d8 = dihedral(8)
        assert d8.n == 8 and not d8.is_abelian
        q8 = dicyclic(8)
        assert q8.n == 8
        # Q8 has a unique involution
        assert sum(1 for x in range(8) if q8.order_of(x) == 2) == 1

    def test_symmetric(self):
        s4 = symmetric(4)
        assert s4.n == 24
        assert sorted(s4.order_of(x) for x in range(24)).count(2) == 9

    def test_semidirect(self):
        f20 = semidirect_cyclic(5, 4, 2)
        assert f20.n == 20 and not f20.is_abelian
        with pytest.raises(GroupConstructionError):
            semidirect_cyclic(5, 2, 2)  # 2^2 != 1 mod 5

    def test_direct_product(self):
        g = direct_product(cyclic(2), cyclic(3))
        assert g.n == 6 and g.is_abelian
        assert is_cyclic(g)[0]

    def test_registry(self):
        assert build_group("c5").n == 5
        assert build_group("c5xc5").n == 25
        assert build_group("s4").n == 24
        assert build_group("d8").n == 8
        assert build_group("q8").n == 8
        assert build_group("es27").n == 27
        with pytest.raises(GroupConstructionError):
            build_group("nope")

    def test_order_cap(self):
        with pytest.raises(GroupConstructionError):
            cyclic(300)

    def test_invalid_table(self):
        with pytest.raises(GroupConstructionError):
            FiniteGroup([[0, 1], [1, 1]])
        # associativity violation: constant rows pass Latin-square but not identity
        with pytest.raises(GroupConstructionError):
            FiniteGroup([[1, 0], [1, 0]])


class TestSubgroups:
    def test_prime_cyclic(self):
        assert len(cyclic(5).subgroups()) == 2

    def test_c5xc5_has_eight(self):
        # 6 lines of the plane plus trivial and full
        assert len(abelian([5, 5]).subgroups()) == 8

    def test_es27_contains_worked_pair(self):
        g = extraspecial27()
        ia, ic = g.names.index("a"), g.names.index("c")
        subs = g.subgroups()
        ac = g.generated([ia, ic])
        a = g.generated([ia])
        assert ac in subs and a in subs
        assert ac.order == 9 and a.order == 3

    def test_lagrange(self):
        for g in (symmetric(4), dicyclic(12), extraspecial27()):
            for s in g.subgroups():
                assert g.n % s.order == 0

    @pytest.mark.parametrize(
        "maker",
        [lambda: cyclic(6), lambda: dihedral(8), lambda: dicyclic(8),
         lambda: abelian([2, 2, 2])],
    )
    def test_against_brute_force_subset_scan(self, maker):
        # oracle: every subset containing the identity that is closed under
        # the product is a subgroup (finiteness gives inverses)
        import itertools

        g = maker()
        brute = set()
        rest = [x for x in range(g.n) if x != 0]
        for k in range(g.n):
            for extra in itertools.combinations(rest, k):
                cand = (0,) + extra
                cset = set(cand)
                if all(g.table[a][b] in cset for a in cand for b in cand):
                    brute.add(frozenset(cand))
        assert {frozenset(s.elems) for s in g.subgroups()} == brute

    def test_validation(self):
        g = cyclic(4)
        with pytest.raises(GroupConstructionError):
            Subgroup(g, [0, 1])  # not closed


class TestOperations:
    def test_normalizer_in_es27(self):
        g = extraspecial27()
        ia = g.names.index("a")
        a = g.generated([ia])
        n = normalizer(g, a)
        ic = g.names.index("c")
        assert n == g.generated([ia, ic])

    def test_quotient_es27_worked_pair(self):
        g = extraspecial27()
        ia, ic = g.names.index("a"), g.names.index("c")
        h = g.generated([ia, ic])
        k = g.generated([ia])
        q, proj = quotient(h, k)
        assert q.n == 3
        assert is_cyclic(q)[0]
        # canonical projection is a homomorphism
        for x in h.elems:
            for y in h.elems:
                assert proj[g.table[x][y]] == q.table[proj[x]][proj[y]]

    def test_quotient_requires_normal(self):
        s3 = symmetric(3)
        refl = next(x for x in range(6) if s3.order_of(x) == 2)
        h = s3.full_subgroup()
        k = s3.generated([refl])
        with pytest.raises(ValueError):
            quotient(h, k)

    def test_transversal_partition(self):
        g = extraspecial27()
        ia, ic = g.names.index("a"), g.names.index("c")
        h = g.generated([ia, ic])
        t = right_transversal(g, h)
        assert [g.names[x] for x in t.reps] == ["1", "b", "b^2"]
        # (subgroup element, rep) -> product is a bijection onto G
        products = {g.table[s][rep] for rep in t.reps for s in h.elems}
        assert len(products) == g.n

    def test_minimal_normal_over(self):
        g = extraspecial27()
        ia, ic = g.names.index("a"), g.names.index("c")
        h = g.generated([ia, ic])
        k = g.generated([ia])
        mins = minimal_normal_over(h, k)
        assert all(k < ell and ell.is_normal_in(h) for ell in mins)
        assert all(ell.order == 9 for ell in mins)  # H/K has order 3, L = H


class TestFileFormats:
    def test_cayley_round_trip(self):
        g = cyclic(3)
        text = "3\n" + "\n".join(" ".join(str(v) for v in row) for row in g.table)
        h = from_cayley_table(text)
        assert h.table == g.table

    def test_cayley_rejects_garbage(self):
        with pytest.raises(GroupConstructionError):
            from_cayley_table("2\n0 1\n1 1")

    def test_parse_cycles(self):
        assert parse_cycles("(1 2 3)(4 5)") == (1, 2, 0, 4, 3)
        assert parse_cycles("(1,2)") == (1, 0)
        with pytest.raises(GroupConstructionError):
            parse_cycles("1 2 3")
        with pytest.raises(GroupConstructionError):
            parse_cycles("(1 2)(2 3)")  # not disjoint

    def test_permutation_group_a4(self):
        g = from_permutations(["(1 2 3)", "(2 3 4)"])
        assert g.n == 12
        assert sorted(g.order_of(x) for x in range(12)) == [1] + [2] * 3 + [3] * 8

    def test_permutation_identity_first(self):
        g = from_permutations(["(1 2)", "(3 4)"])
        assert g.n == 4
        assert g.names[0] == "()"
