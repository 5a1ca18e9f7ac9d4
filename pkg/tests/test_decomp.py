import itertools
import json

import pytest

from gring.decomp import (
    abelian_decompose,
    crt_split,
    decompose,
    decompose_all,
    decomposition_report,
    hook_length_degree,
    report_to_json,
    symmetric_decompose,
    verify_components,
)
from gring.galois import canonical_ring
from gring.groups import abelian, build_group, cyclic, dihedral, extraspecial27, symmetric
from gring.groupring import GroupRingElem
from gring.shoda import NotStronglyMonomial


def brute_force_tableaux(shape):
    """Oracle: count standard Young tableaux by explicit enumeration."""
    n = sum(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        fill = dict(zip(cells, perm))
        ok = True
        for (i, j), v in fill.items():
            if (i, j + 1) in fill and fill[(i, j + 1)] < v:
                ok = False
                break
            if (i + 1, j) in fill and fill[(i + 1, j)] < v:
                ok = False
                break
        count += ok
    return count


class TestCrtSplit:
    def test_example_36(self):
        g = abelian([5, 5])
        assert [(c.p, c.r) for c in crt_split(36, g)] == [(2, 2), (3, 2)]

    def test_single_factor(self):
        assert [(c.p, c.r) for c in crt_split(8, cyclic(5))] == [(2, 3)]

    def test_six(self):
        assert [(c.p, c.r) for c in crt_split(6, cyclic(5))] == [(2, 1), (3, 1)]

    def test_gcd_violation_names_prime(self):
        with pytest.raises(ValueError, match="prime 5"):
            crt_split(10, cyclic(5))

    def test_rejects_one(self):
        with pytest.raises(ValueError):
            crt_split(1, cyclic(5))


class TestDecompose:
    def test_trivial_group(self):
        comps = decompose(cyclic(1), 3, 2)
        assert len(comps) == 1
        assert comps[0].matrix_size == 1 and comps[0].ring_degree == 1

    def test_c5_shape(self):
        comps = decompose(cyclic(5), 2, 3)
        assert sorted((c.matrix_size, c.ring_degree) for c in comps) == [(1, 1), (1, 4)]

    def test_es27_shape(self):
        comps = decompose(extraspecial27(), 2, 3)
        big = [c for c in comps if c.matrix_size == 3]
        assert len(big) == 1 and big[0].ring_degree == 2

    def test_dimension_identity(self):
        for g, p, r in [
            (symmetric(4), 5, 2),
            (dihedral(16), 3, 2),
            (extraspecial27(), 7, 1),
        ]:
            comps = decompose(g, p, r)
            assert sum(c.dimension for c in comps) == g.n

    def test_gcd_precondition(self):
        with pytest.raises(ValueError):
            decompose(cyclic(5), 5, 1)


class TestAbelianShortcut:
    def test_example_3_4_multiplicities(self):
        g = abelian([5, 5])
        assert sorted(abelian_decompose(g, 2, 2)) == [(1, 1)] + [(1, 4)] * 6
        assert sorted(abelian_decompose(g, 3, 2)) == [(1, 1)] + [(1, 4)] * 6

    def test_trivial(self):
        assert abelian_decompose(cyclic(1), 3, 2) == [(1, 1)]

    def test_rejects_non_abelian(self):
        with pytest.raises(ValueError):
            abelian_decompose(symmetric(3), 5, 1)

    @pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (3, 2)])
    def test_agrees_with_general_path(self, p, r):
        # every abelian group of order <= 50 coprime to p
        seen = 0
        for n in range(1, 51):
            if n % p == 0:
                continue
            for typ in _abelian_types(n):
                g = abelian(typ)
                short = sorted(abelian_decompose(g, p, r))
                full = sorted(
                    (c.matrix_size, c.ring_degree) for c in decompose(g, p, r)
                )
                assert short == full, (typ, p, r)
                seen += 1
        assert seen >= 30


def _abelian_types(n):
    from gring.corpus import _abelian_types as at

    return at(n)


class TestSymmetricShortcut:
    def test_s3(self):
        assert symmetric_decompose(3, 5, 1) == [(1, 2), (2, 1)]

    def test_s1(self):
        assert symmetric_decompose(1, 3, 1) == [(1, 1)]

    def test_s4_and_dimension(self):
        rows = symmetric_decompose(4, 5, 2)
        assert rows == [(1, 2), (2, 1), (3, 2)]
        assert sum(d * d * m for d, m in rows) == 24

    def test_requires_p_greater_n(self):
        with pytest.raises(ValueError):
            symmetric_decompose(5, 5, 1)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_hook_lengths_against_enumeration(self, n):
        from gring.decomp import _partitions

        for shape in _partitions(n):
            assert hook_length_degree(shape) == brute_force_tableaux(shape)

    def test_matches_general_path_for_s4(self):
        comps = decompose(symmetric(4), 5, 1)
        shapes = sorted((c.matrix_size, c.ring_degree) for c in comps)
        assert shapes == [(1, 1), (1, 1), (2, 1), (3, 1), (3, 1)]


def conjugacy_classes(g):
    seen = [False] * g.n
    classes = []
    for x in range(g.n):
        if seen[x]:
            continue
        orbit = {g.conj(x, t) for t in range(g.n)}
        for y in orbit:
            seen[y] = True
        classes.append(frozenset(orbit))
    return classes


class TestComponentCountOracle:
    """The number of simple components of F_pG equals the number of
    conjugacy classes fused under x -> x^p (counted independently of the
    idempotent machinery)."""

    @pytest.mark.parametrize("p", [5, 7])
    def test_fused_class_count(self, p):
        from gring.groups import dicyclic, semidirect_cyclic

        groups = [
            symmetric(3),
            symmetric(4),
            dihedral(12),
            dicyclic(12),
            abelian([9]),
            abelian([2, 4]),
            extraspecial27(),
            semidirect_cyclic(7, 3, 2),
        ]
        for g in groups:
            if g.n % p == 0:
                continue
            classes = conjugacy_classes(g)
            class_of = {}
            for idx, cls in enumerate(classes):
                for x in cls:
                    class_of[x] = idx
            # the p-power map permutes the classes; count its orbits
            step = [class_of[g.power(min(cls), p)] for cls in classes]
            seen = set()
            orbits = 0
            for i in range(len(classes)):
                if i in seen:
                    continue
                orbits += 1
                j = i
                while j not in seen:
                    seen.add(j)
                    j = step[j]
            comps = decompose(g, p, 1)
            assert len(comps) == orbits, (g.name, p, len(comps), orbits)


class TestVerification:
    def test_example_3_4_all_checks(self):
        g = abelian([5, 5])
        dec = decompose_all(g, 36)
        for base, comps in dec.blocks:
            rep = verify_components(g, base, comps)
            assert all(ok for _, ok, _ in rep), rep

    def test_negative_control_corrupted_idempotent(self):
        g = cyclic(5)
        comps = decompose(g, 2, 3)
        rep = verify_components(g, comps[0].base, comps)
        assert all(ok for _, ok, _ in rep)
        # corrupt one idempotent coefficient
        bad = dict(comps[0].shoda.w_full.coeffs)
        bad[1] = bad.get(1, 0) + 1
        comps[0].shoda.w_full = GroupRingElem(comps[0].shoda.w_full.ring, bad)
        rep2 = verify_components(g, comps[0].base, comps)
        failed = {name for name, ok, _ in rep2 if not ok}
        assert failed  # at least one structural check trips

    def test_component_ring_has_proper_ideal(self):
        # p * 1 is neither zero nor a unit in GR(p^r, m) when r >= 2
        for p, r, m in [(2, 2, 4), (2, 3, 2), (3, 2, 1)]:
            ring = canonical_ring(p, r, m)
            x = ring.one * p
            assert x
            assert not x.is_unit


class TestReporting:
    def test_example_3_4_exact_report(self):
        g = abelian([5, 5])
        g.name = "C5xC5"
        report = decomposition_report(decompose_all(g, 36))
        assert report["group"] == "C5xC5" and report["n"] == 36
        wanted = {
            2: [(1, 1, 1), (1, 4, 6)],
            3: [(1, 1, 1), (1, 4, 6)],
        }
        for prime in report["primes"]:
            rows = [
                (row["matrix_size"], row["ring"]["m"], row["multiplicity"])
                for row in prime["components"]
            ]
            assert rows == wanted[prime["p"]]
            assert prime["dimension_check"]

    def test_json_round_trip_and_determinism(self):
        g = build_group("es27")
        report = decomposition_report(decompose_all(g, 8))
        s1 = report_to_json(report)
        assert json.loads(s1) == report
        report2 = decomposition_report(decompose_all(build_group("es27"), 8))
        assert report_to_json(report2) == s1

    def test_not_strongly_monomial_propagates(self):
        mats = sorted(
            m
            for m in itertools.product(range(3), repeat=4)
            if (m[0] * m[3] - m[1] * m[2]) % 3 == 1
        )
        ident = (1, 0, 0, 1)
        mats.remove(ident)
        mats.insert(0, ident)
        idx = {m: i for i, m in enumerate(mats)}

        def mul(x, y):
            a, b, c, d = x
            e, f, g, h = y
            return (
                (a * e + b * g) % 3,
                (a * f + b * h) % 3,
                (c * e + d * g) % 3,
                (c * f + d * h) % 3,
            )

        from gring.groups import FiniteGroup

        sl23 = FiniteGroup(
            [[idx[mul(x, y)] for y in mats] for x in mats], name="SL(2,3)"
        )
        with pytest.raises(NotStronglyMonomial):
            decompose(sl23, 7, 1)
