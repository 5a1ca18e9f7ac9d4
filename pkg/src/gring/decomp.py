"""Assembly of the full decomposition of Z_nG: CRT split over the prime
powers of n, per-prime component tables from strong Shoda pairs, shortcuts
for abelian groups and symmetric groups, and structural verification.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .component import ComponentStructure
from .galois import GaloisRing, canonical_ring
from .groups import FiniteGroup
from .groupring import GroupRing, GroupRingElem
from .linalg import ZModOps, unit_pivot_rank
from .modring import PrimePower, factorize, multiplicative_order
from .shoda import NotStronglyMonomial, ShodaData, complete_shoda_data


@dataclass
class Component:
    """One matrix-ring summand M_n(GR(p^r, m)) of Z_{p^r}G with its central
    idempotent and Shoda provenance."""

    shoda: ShodaData
    _structure: ComponentStructure | None = field(default=None, repr=False)

    @property
    def base(self) -> PrimePower:
        return self.shoda.base

    @property
    def matrix_size(self) -> int:
        return self.shoda.matrix_size

    @property
    def ring_degree(self) -> int:
        return self.shoda.ring_degree

    @property
    def idempotent(self) -> GroupRingElem:
        return self.shoda.w_full

    @property
    def display_ring(self) -> GaloisRing:
        """Canonical presentation GR(p^r, m) for reporting (all presentations
        of the same degree are isomorphic)."""
        return canonical_ring(self.base.p, self.base.r, self.ring_degree)

    @property
    def dimension(self) -> int:
        return self.matrix_size**2 * self.ring_degree

    def structure(self) -> ComponentStructure:
        if self._structure is None:
            self._structure = ComponentStructure(self.shoda)
        return self._structure

    def __repr__(self):
        mod = self.base.modulus
        if self.ring_degree == 1:
            ring = f"Z_{mod}"
        else:
            ring = f"GR({mod}, deg {self.ring_degree})"
        if self.matrix_size == 1:
            return ring
        return f"M_{self.matrix_size}({ring})"


def decompose(g: FiniteGroup, p: int, r: int) -> list[Component]:
    """Components of Z_{p^r}G, one per (strong Shoda pair, class).

    Raises NotStronglyMonomial when the strong-Shoda idempotents do not sum
    to 1 (the group is then outside the constructive scope).
    """
    comps = [Component(d) for d in complete_shoda_data(g, p, r)]
    total = sum(c.dimension for c in comps)
    if total != g.n:
        raise NotStronglyMonomial(
            f"{g.name}: dimension identity fails ({total} != {g.n})"
        )
    return comps


def abelian_decompose(g: FiniteGroup, p: int, r: int) -> list[tuple[int, int]]:
    """Component multiset [(1, o_d(p))] for abelian G: one degree-o_d(p)
    summand per d | |G| for each block of o_d(p) elements of order d."""
    if not g.is_abelian:
        raise ValueError(f"{g.name} is not abelian")
    if math.gcd(p, g.n) != 1:
        raise ValueError(f"p = {p} divides |G| = {g.n}")
    counts: dict[int, int] = {}
    for x in range(g.n):
        d = g.order_of(x)
        counts[d] = counts.get(d, 0) + 1
    out = []
    for d in sorted(counts):
        o = multiplicative_order(p, d)
        a_d, rem = divmod(counts[d], o)
        assert rem == 0, "order count not divisible by o_d(p)"
        out.extend([(1, o)] * a_d)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                out.append((first,) + rest)
    return tuple(out)


def hook_length_degree(shape: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of the shape (hook length formula)."""
    n = sum(shape)
    cols = [0] * (shape[0] if shape else 0)
    for row in shape:
        for j in range(row):
            cols[j] += 1
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j) + (cols[j] - i) - 1
    return math.factorial(n) // prod


def symmetric_decompose(n: int, p: int, r: int) -> list[tuple[int, int]]:
    """[(matrix_size, multiplicity)] for Z_{p^r}S_n, valid for p > n; every
    summand is a matrix ring over Z_{p^r} itself."""
    if p <= n:
        raise ValueError(f"requires p > n, got p = {p}, n = {n}")
    PrimePower(p, r)  # validates p prime, cap
    degrees: dict[int, int] = {}
    for shape in _partitions(n):
        d = hook_length_degree(shape)
        degrees[d] = degrees.get(d, 0) + 1
    return sorted(degrees.items())


def crt_split(n: int, g: FiniteGroup) -> list[PrimePower]:
    """Prime-power factors of n; every prime must avoid |G|."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    out = []
    for p, r in factorize(n):
        if g.n % p == 0:
            raise ValueError(f"prime {p} of n = {n} divides |G| = {g.n}")
        out.append(PrimePower(p, r))
    return out


@dataclass
class Decomposition:
    group: FiniteGroup
    n: int
    blocks: list[tuple[PrimePower, list[Component]]]


def decompose_all(g: FiniteGroup, n: int) -> Decomposition:
    blocks = []
    for ctx in crt_split(n, g):
        blocks.append((ctx, decompose(g, ctx.p, ctx.r)))
    return Decomposition(group=g, n=n, blocks=blocks)


# ---------------------------------------------------------------------------
# verification


def verify_components(g: FiniteGroup, base: PrimePower, comps: list[Component]):
    """Structural checks for one prime block; returns [(check, ok, detail)]."""
    ring = GroupRing(g, base)
    report = []
    dim = sum(c.dimension for c in comps)
    report.append(("dimension_identity", dim == g.n, f"{dim} vs {g.n}"))
    ws = [GroupRingElem(ring, c.idempotent.coeffs) for c in comps]
    idem = all(w * w == w for w in ws)
    report.append(("idempotent", idem, f"{len(ws)} idempotents"))
    central = all(w.is_central() for w in ws)
    report.append(("central", central, ""))
    orth = all(
        not (ws[i] * ws[j])
        for i in range(len(ws))
        for j in range(len(ws))
        if i != j
    )
    report.append(("pairwise_orthogonal", orth, ""))
    total = ring.zero
    for w in ws:
        total = total + w
    report.append(("sum_to_one", total == ring.one, total.render()))
    red = all(
        c.idempotent.reduce() == c.shoda.e_full for c in comps
    )
    report.append(("reduction_matches_e", red, ""))
    return report


def component_embed(a: GroupRingElem, comp: Component):
    """Matrix over the component coefficient ring of a * w (restricted to
    the ideal this is the component isomorphism)."""
    return comp.structure().embed(a)


def verify_decomposition(dec: Decomposition) -> dict:
    """Structural report over every prime block of a decomposition."""
    out = {}
    for base, comps in dec.blocks:
        out[(base.p, base.r)] = verify_components(dec.group, base, comps)
    return out


def certify_embedding_surjective(comp: Component) -> bool:
    """Rank certificate: the images of all group elements span the full
    matrix space over S (dimension n^2 * m over Z_{p^r})."""
    cs = comp.structure()
    g = comp.shoda.group
    vectors = []
    for x in range(g.n):
        mat = cs.embed(cs.ring_g.basis(x))
        vectors.append(
            [c for row in mat for entry in row for c in entry.coeffs]
        )
    want = comp.matrix_size**2 * comp.ring_degree
    return unit_pivot_rank(vectors, ZModOps(comp.base)) == want


# ---------------------------------------------------------------------------
# reporting


def merged_rows(comps: list[Component]) -> list[dict]:
    """Display rows merged by (matrix_size, ring degree), canonical modulus."""
    groups: dict[tuple[int, int], int] = {}
    for c in comps:
        key = (c.matrix_size, c.ring_degree)
        groups[key] = groups.get(key, 0) + 1
    rows = []
    for (size, deg), mult in sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        base = comps[0].base
        ring = canonical_ring(base.p, base.r, deg)
        rows.append(
            {
                "matrix_size": size,
                "ring": {
                    "p": base.p,
                    "r": base.r,
                    "m": deg,
                    "modulus": [int(c) for c in ring.h.coeffs],
                },
                "multiplicity": mult,
            }
        )
    return rows


def decomposition_report(dec: Decomposition, verify: bool = True) -> dict:
    primes = []
    for base, comps in dec.blocks:
        entry = {
            "p": base.p,
            "r": base.r,
            "components": merged_rows(comps),
        }
        if verify:
            checks = verify_components(dec.group, base, comps)
            entry["dimension_check"] = all(ok for _, ok, _ in checks)
        primes.append(entry)
    return {"group": dec.group.name, "n": dec.n, "primes": primes}


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))
