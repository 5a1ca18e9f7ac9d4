"""Generating sets for U(Z_{p^r}G).

Per component: diagonal units (Galois-ring unit generators placed at the
leading matrix position) and elementary units 1 + s E_{PQ} built from the
complete set of matrix units realized as group-ring elements.  The cyclic
Z_{2^r}C5 case additionally ships its closed-form generator list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import (
    CERT_CAP,
    group_ring_closure,
)
from .decomp import Component, decompose
from .groupring import GroupRing, GroupRingElem, unit_order
from .groups import FiniteGroup, build_group
from .modring import PrimePower


@dataclass
class UnitGenerator:
    element: GroupRingElem
    inverse: GroupRingElem
    kind: str  # "diagonal" | "elementary" | "fixture"
    component: int | None = None
    declared_order: int | None = None
    label: str = ""

    def verify(self) -> bool:
        one = self.element.ring.one
        return (
            self.element * self.inverse == one
            and self.inverse * self.element == one
        )


class MatrixUnitKit:
    """The complete set of matrix units of one component, as group-ring
    elements: E[(P, Q)] for flat indices P = u * l + i over blocks u and
    crossed positions i."""

    def __init__(self, comp: Component):
        self.comp = comp
        cs = comp.structure()
        self.cs = cs
        g = comp.shoda.group
        ring = cs.ring_g
        l = cs.gal_order
        ehat = ring.zero
        for gp in cs.gamma_pows:
            ehat = ehat + gp
        self.ehat = ehat * comp.base.inv(l)
        inner0 = cs.alpha_inv_conc * self.ehat * cs.alpha_conc
        reps = comp.shoda.transversal.reps
        self.size = cs.size
        self.units: dict[tuple[int, int], GroupRingElem] = {}
        left = []
        right = []
        for u in range(cs.block_count):
            for i in range(l):
                left.append(ring.basis(g.inverse[reps[u]]) * cs.gamma_pows[i])
                right.append(cs.gamma_pows[(l - i) % l] * ring.basis(reps[u]))
        for pp in range(self.size):
            mid = left[pp] * inner0
            for qq in range(self.size):
                self.units[(pp, qq)] = mid * right[qq]

    def verify_relations(self) -> bool:
        """E_PQ E_RS = delta_QR E_PS for all indices, and sum E_PP = w."""
        n = self.size
        ring = self.cs.ring_g
        total = ring.zero
        for pp in range(n):
            total = total + self.units[(pp, pp)]
        if total != self.cs.w:
            return False
        for pp in range(n):
            for qq in range(n):
                for rr in range(n):
                    for ss in range(n):
                        prod = self.units[(pp, qq)] * self.units[(rr, ss)]
                        want = self.units[(pp, ss)] if qq == rr else ring.zero
                        if prod != want:
                            return False
        return True


def build_matrix_units(comp: Component) -> MatrixUnitKit:
    return MatrixUnitKit(comp)


def scalar_additive_generators(comp: Component):
    """Additive generating set {p^t xi^j} of the component coefficient ring."""
    s_ring = comp.structure().s_ring
    base = comp.base
    out = []
    for t in range(base.r):
        for j in range(s_ring.m):
            cs = [0] * s_ring.m
            cs[j] = base.p**t
            out.append(s_ring.elem(cs))
    return out


def elementary_generators(comp: Component, kit: MatrixUnitKit | None = None):
    """Global units 1 + s E_PQ for off-diagonal (P, Q) and s in the additive
    generating set of S; the inverse is 1 - s E_PQ."""
    if comp.matrix_size < 2:
        return []
    kit = kit or build_matrix_units(comp)
    cs = comp.structure()
    one = cs.ring_g.one
    base = comp.base
    out = []
    for s in scalar_additive_generators(comp):
        s_central = cs.scalar_in_component(s)
        # (1 + sE)^k = 1 + k s E, so the order is the additive order of s
        add_order = base.p ** (base.r - min(base.valuation(c) for c in s.coeffs if c))
        for pp in range(kit.size):
            for qq in range(kit.size):
                if pp == qq:
                    continue
                se = s_central * kit.units[(pp, qq)]
                out.append(
                    UnitGenerator(
                        element=one + se,
                        inverse=one - se,
                        kind="elementary",
                        declared_order=add_order,
                        label=f"1 + ({s}) E[{pp},{qq}]",
                    )
                )
    return out


def diagonal_generators(comp: Component, kit: MatrixUnitKit | None = None):
    """Global units 1 - E00 + u E00 for u over the Galois-ring unit
    generators of the component coefficient ring."""
    kit = kit or build_matrix_units(comp)
    cs = comp.structure()
    one = cs.ring_g.one
    e00 = kit.units[(0, 0)]
    out = []
    for u in cs.s_ring.unit_group_generators():
        u_conc = cs.s_to_conc(u)
        u_inv_conc = cs.s_to_conc(u.inverse())
        out.append(
            UnitGenerator(
                element=one - e00 + u_conc * e00,
                inverse=one - e00 + u_inv_conc * e00,
                kind="diagonal",
                declared_order=u.order(),
                label=f"diag({u})",
            )
        )
    return out


def component_generators(comp: Component) -> list[UnitGenerator]:
    kit = build_matrix_units(comp)
    return diagonal_generators(comp, kit) + elementary_generators(comp, kit)


def unit_group_generators(
    g: FiniteGroup, p: int, r: int, comps: list[Component] | None = None
):
    """Union over components of diagonal + elementary generators."""
    comps = comps if comps is not None else decompose(g, p, r)
    gens: list[UnitGenerator] = []
    for idx, comp in enumerate(comps):
        for gen in component_generators(comp):
            gen.component = idx
            gens.append(gen)
    return comps, gens


def expected_unit_group_order(comps: list[Component]) -> int:
    """Product over components of |GL_n(GR(p^r, m))| =
    |GL_n(F_{p^m})| * p^{(r-1) m n^2}."""
    total = 1
    for comp in comps:
        p, r = comp.base.p, comp.base.r
        n, m = comp.matrix_size, comp.ring_degree
        q = p**m
        gl = 1
        for i in range(n):
            gl *= q**n - q**i
        total *= gl * p ** ((r - 1) * m * n * n)
    return total


def certify_closure(
    ring: GroupRing, gens: list[UnitGenerator], expected: int, cap: int = CERT_CAP
) -> dict:
    """BFS-closure certification with the honesty cap: above cap the result
    is "not certified, property-checked only" (all generators verified)."""
    props = all(gen.verify() for gen in gens)
    result = {
        "expected_order": expected,
        "generators_verified": props,
        "cap": cap,
    }
    if expected > cap:
        result["status"] = "not certified (above cap); property-checked only"
        result["certified"] = False
        return result
    codes = group_ring_closure(ring, [gen.element for gen in gens], cap=cap)
    if codes is None:
        result["status"] = "not certified (closure exceeded cap)"
        result["certified"] = False
        return result
    result["closure_order"] = int(codes.size)
    result["certified"] = bool(codes.size == expected)
    result["status"] = "certified" if result["certified"] else "closure mismatch"
    return result


# ---------------------------------------------------------------------------
# the closed-form Z_{2^r}C5 generator list


def z2r_c5_fixture(r: int, group: FiniteGroup | None = None):
    """The published generator list for U(Z_{2^r}C5).

    r = 1: the single generator 1 + g + g^2 of order 15.  r >= 2: the seven
    generators 5, -1, 1+g+g^2, 1+2g, 1+2g^2, 1+4g, (1-a)ghat - 1 with
    a = 3 * 5^{-1} mod 2^r, of declared orders 2^{r-2}, 2, 15*2^{r-1},
    2^{r-1}, 2^{r-1}, 2^{r-2}, 2.

    ghat is read as the normalized hat (|<g>|^{-1} sum g^i); if the order-2
    check fails under that reading the unnormalized sum is tried and the
    discrepancy is reported in the notes, never silently patched.
    """
    grp = group if group is not None else build_group("c5")
    notes: list[str] = []
    if r == 1:
        ring = GroupRing(grp, PrimePower(2, 1))
        g = ring.basis(1)
        u = ring.one + g + g * g
        gen = UnitGenerator(u, u.inverse(), "fixture", None, 15, "1+g+g^2")
        return [gen], notes
    if r < 1:
        raise ValueError("r must be >= 1")
    base = PrimePower(2, r)
    ring = GroupRing(grp, base)
    g = ring.basis(1)
    one = ring.one
    full = grp.full_subgroup()
    a = 3 * pow(5, -1, base.modulus) % base.modulus
    declared = [2 ** (r - 2), 2, 15 * 2 ** (r - 1), 2 ** (r - 1), 2 ** (r - 1),
                2 ** (r - 2), 2]
    labels = ["5", "-1", "1+g+g^2", "1+2g", "1+2g^2", "1+4g", "(1-a)ghat-1"]
    elems = [
        ring.scalar(5),
        -one,
        one + g + g * g,
        one + 2 * g,
        one + 2 * (g * g),
        one + 4 * g,
        (1 - a) * ring.hat(full) - one,
    ]
    if unit_order(elems[-1]) != 2:
        alt = (1 - a) * ring.hat_unnormalized(full) - one
        notes.append(
            "normalized ghat gives order "
            f"{unit_order(elems[-1])} != 2 at r={r}; using unnormalized sum"
        )
        elems[-1] = alt
    out = []
    for elem, dec, label in zip(elems, declared, labels):
        out.append(UnitGenerator(elem, elem.inverse(), "fixture", None, dec, label))
    return out, notes


def fixture_closure_order(r: int) -> int:
    """|U(Z_{2^r}C5)| = |U(Z_{2^r})| * 2^{4(r-1)} * 15."""
    u_z = 1 if r == 1 else 2 ** (r - 1)
    return u_z * 2 ** (4 * (r - 1)) * 15


def involution_fixture(r: int, group: FiniteGroup | None = None):
    """The five order-2 elements g_3..g_7 spanning the involution layer for
    r >= 3 (elementary abelian of rank 5)."""
    grp = group if group is not None else build_group("c5")
    base = PrimePower(2, r)
    ring = GroupRing(grp, base)
    g = [ring.basis(i) for i in range(5)]
    one = ring.one
    t = 2 ** (r - 1)
    a = 3 * pow(5, -1, base.modulus) % base.modulus
    g7 = (1 - a) * ring.hat(grp.full_subgroup()) - one
    if unit_order(g7) != 2:
        g7 = (1 - a) * ring.hat_unnormalized(grp.full_subgroup()) - one
    return [
        one + t * (g[1] + g[2] + g[3] + g[4]),
        one + t * (g[1] + g[2]),
        one + t * (g[2] + g[4]),
        one + t * g[1],
        g7,
    ]
