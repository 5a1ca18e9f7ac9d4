"""Strong Shoda pairs and their idempotents.

For a pair (H, K) with H/K cyclic of order k and a p-cyclotomic class of
character exponents, this module builds the primitive central idempotent
eps_C of F_pH, its exact lift omega_C to Z_{p^r}H (binomial idempotent
lifting through the nilpotency index), and the central idempotents
e_C / w_C of the full group ring obtained by summing distinct conjugates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .galois import canonical_ring, trace
from .groups import (
    FiniteGroup,
    Subgroup,
    Transversal,
    is_cyclic,
    minimal_normal_over,
    normalizer,
    quotient,
    right_transversal,
)
from .groupring import GroupRing, GroupRingElem, nilpotency_index
from .modring import PrimePower, multiplicative_order


class NotStronglyMonomial(RuntimeError):
    """The strong-Shoda idempotents do not sum to 1 for this group."""


@dataclass(frozen=True)
class CyclotomicClass:
    """Orbit of generator exponents mod k under multiplication by p."""

    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members or list(self.members) != sorted(set(self.members)):
            raise ValueError("class members must be sorted and distinct")
        if self.k > 1 and any(
            not 0 < e < self.k or math.gcd(e, self.k) != 1 for e in self.members
        ):
            raise ValueError(f"members must be generator exponents mod {self.k}")

    @property
    def rep(self) -> int:
        return self.members[0]

    def __repr__(self):
        return f"[{', '.join(str(m) for m in self.members)}] mod {self.k}"


@lru_cache(maxsize=None)
def cyclotomic_classes_mod(k: int, p: int) -> tuple[CyclotomicClass, ...]:
    """p-cyclotomic classes of generator exponents mod k (ascending reps)."""
    if k == 1:
        return (CyclotomicClass(1, (0,)),)
    if math.gcd(p, k) != 1:
        raise ValueError(f"p = {p} must be coprime to k = {k}")
    left = {e for e in range(1, k) if math.gcd(e, k) == 1}
    out = []
    while left:
        e = min(left)
        orbit = []
        x = e
        while x not in orbit:
            orbit.append(x)
            x = x * p % k
        orbit_sorted = tuple(sorted(orbit))
        left -= set(orbit_sorted)
        out.append(CyclotomicClass(k, orbit_sorted))
    return tuple(out)


def cyclotomic_classes(h: Subgroup, k: Subgroup, p: int) -> list[CyclotomicClass]:
    q, _ = quotient(h, k)
    cyc, _ = is_cyclic(q)
    if not cyc:
        raise ValueError("H/K is not cyclic")
    return list(cyclotomic_classes_mod(q.n, p))


def is_shoda_pair(g: FiniteGroup, h: Subgroup, k: Subgroup) -> bool:
    """Whether [H,x] cap H <= K forces x in H, for every x in G."""
    q, _ = quotient(h, k)
    if not is_cyclic(q)[0]:
        raise ValueError("H/K is not cyclic")
    hset = set(h.elems)
    kset = set(k.elems)
    for x in range(g.n):
        if x in hset:
            continue
        commutators_in_h = {
            c
            for hh in h.elems
            if (c := g.table[g.table[g.inverse[hh]][g.inverse[x]]][g.table[hh][x]])
            in hset
        }
        if commutators_in_h <= kset:
            return False
    return True


def epsilon_plain(h: Subgroup, k: Subgroup, ring: GroupRing) -> GroupRingElem:
    """eps(H,K): K-hat if H = K, else the product of (K-hat - L-hat) over
    minimal normal L of H properly containing K."""
    if h.parent is not ring.group:
        raise ValueError("subgroups must live in the ring's group")
    khat = ring.hat(k)
    if h.order == k.order:
        return khat
    out = ring.one
    for ell in minimal_normal_over(h, k):
        out = out * (khat - ring.hat(ell))
    return out


def _candidate_pairs(g: FiniteGroup):
    """Pairs satisfying the prime-free strong-Shoda conditions:
    (i) K <= H normal in N_G(K), (ii) H/K cyclic and self-centralizing in
    N_G(K)/K.  Cached per group."""
    cached = getattr(g, "_ssp_candidates", None)
    if cached is not None:
        return cached
    out = []
    for k in g.subgroups():
        n = normalizer(g, k)
        qn, proj = quotient(n, k)
        for h in g.subgroups():
            if not (k <= h and h <= n):
                continue
            if not h.is_normal_in(n):
                continue
            hbar = sorted({proj[x] for x in h.elems})
            if not any(qn.order_of(x) == len(hbar) for x in hbar):
                continue
            cent = qn.centralizer_of(hbar)
            if set(cent.elems) != set(hbar):
                continue
            out.append((h, k, n))
    g._ssp_candidates = out
    return out


def is_strong_shoda_pair(
    g: FiniteGroup, h: Subgroup, k: Subgroup, p: int, r: int = 1
) -> bool:
    """Conditions (i)-(iii); the vanishing products of (iii) are computed
    over Z_{p^r} (|H| must be invertible, i.e. gcd(p, |G|) = 1)."""
    if not k <= h:
        return False
    n = normalizer(g, k)
    if not (h <= n and h.is_normal_in(n)):
        return False
    qn, proj = quotient(n, k)
    hbar = sorted({proj[x] for x in h.elems})
    if not any(qn.order_of(x) == len(hbar) for x in hbar):
        return False
    if set(qn.centralizer_of(hbar).elems) != set(hbar):
        return False
    return _condition_three(g, h, k, n, PrimePower(p, r))


def _condition_three(g, h, k, n, base) -> bool:
    ring = GroupRing(g, base)
    eps = epsilon_plain(h, k, ring)
    nset = set(n.elems)
    for x in range(g.n):
        if x in nset:
            continue
        if eps * eps.conjugate(x):
            return False
    return True


def character_exponents(h: Subgroup, k: Subgroup) -> tuple[int, dict]:
    """(k_order, exponent map): for each element of H, its coset's discrete
    log with respect to a fixed generator of the cyclic quotient H/K."""
    q, proj = quotient(h, k)
    cyc, gen = is_cyclic(q)
    if not cyc:
        raise ValueError("H/K is not cyclic")
    pos = {}
    x, j = 0, 0
    while True:
        pos[x] = j
        x = q.table[x][gen]
        j += 1
        if x == 0:
            break
    return q.n, {elem: pos[proj[elem]] for elem in h.elems}


def epsilon_class(
    h: Subgroup, k: Subgroup, cls: CyclotomicClass, p: int
) -> GroupRingElem:
    """The primitive central idempotent of F_pH for the class: the
    hat-weighted character-trace sum, with the character realized through a
    Teichmuller root of unity of order [H:K] in F_{p^o}."""
    g = h.parent
    ring = GroupRing(g, PrimePower(p, 1))
    if h.order == k.order:
        return ring.hat(h)
    korder, expmap = character_exponents(h, k)
    if cls.k != korder:
        raise ValueError(f"class modulus {cls.k} != [H:K] = {korder}")
    o = multiplicative_order(p, korder)
    field = canonical_ring(p, 1, o)
    zeta_k = field.teichmuller_generator() ** ((p**o - 1) // korder)
    sub1 = field.subring(1)
    e = cls.rep
    trvals = []
    for t in range(korder):
        tr = trace(zeta_k ** (e * t % korder), sub1)
        assert not any(tr.coeffs[1:]), "trace left the prime subfield"
        trvals.append(tr.coeffs[0])
    hinv = pow(h.order, -1, p)
    coeffs: dict[int, int] = {}
    for elem in h.elems:
        v = trvals[expmap[elem]]
        if v:
            t = g.inverse[elem]
            coeffs[t] = (coeffs.get(t, 0) + hinv * v) % p
    return ring.elem(coeffs)


def lift_idempotent(eps: GroupRingElem, r: int) -> GroupRingElem:
    """Exact idempotent of Z_{p^r}G reducing to eps: the n-th power of the
    alternating binomial sum, n the nilpotency index of the lift."""
    lifted = eps.lift_to(r)
    candidates = [nilpotency_index(lifted)]
    if r not in candidates:
        candidates.append(r)  # always-valid fallback exponent
    for n in candidates:
        acc = lifted.ring.zero
        power = lifted.ring.one
        for j in range(1, n + 1):
            power = power * lifted
            acc = acc + power * ((-1) ** (j - 1) * math.comb(n, j))
        omega = acc**n
        if omega * omega == omega and omega.reduce() == eps:
            return omega
    raise AssertionError("idempotent lifting failed")  # cannot happen


def sum_of_distinct_conjugates(elem: GroupRingElem) -> GroupRingElem:
    g = elem.ring.group
    seen = set()
    out = elem.ring.zero
    for x in range(g.n):
        c = elem.conjugate(x)
        if c not in seen:
            seen.add(c)
            out = out + c
    return out


def centralizer_of_elem(elem: GroupRingElem) -> Subgroup:
    g = elem.ring.group
    return Subgroup(g, [x for x in range(g.n) if elem.conjugate(x) == elem])


@dataclass
class ShodaData:
    """Everything attached to one (strong Shoda pair, cyclotomic class)."""

    group: FiniteGroup
    h: Subgroup
    k: Subgroup
    cls: CyclotomicClass
    base: PrimePower
    o: int  # multiplicative order of p mod [H:K]
    epsilon: GroupRingElem  # over F_p, supported in H
    omega: GroupRingElem  # over Z_{p^r}, supported in H
    e_full: GroupRingElem  # sum of distinct conjugates of epsilon
    w_full: GroupRingElem  # sum of distinct conjugates of omega
    centralizer: Subgroup
    transversal: Transversal

    @property
    def matrix_size(self) -> int:
        return self.group.n // self.h.order

    @property
    def ring_degree(self) -> int:
        """l_(H,K) = o / [C:H]."""
        c_over_h = self.centralizer.order // self.h.order
        assert self.o % c_over_h == 0, "o not divisible by [C:H]"
        return self.o // c_over_h

    @property
    def quotient_order(self) -> int:
        return self.h.order // self.k.order


def build_shoda_data(
    g: FiniteGroup, h: Subgroup, k: Subgroup, cls: CyclotomicClass, p: int, r: int
) -> ShodaData:
    base = PrimePower(p, r)
    eps = epsilon_class(h, k, cls, p)
    omega = lift_idempotent(eps, r)
    e_full = sum_of_distinct_conjugates(eps)
    w_full = sum_of_distinct_conjugates(omega)
    cent = centralizer_of_elem(omega)
    o = multiplicative_order(p, h.order // k.order)
    return ShodaData(
        group=g,
        h=h,
        k=k,
        cls=cls,
        base=base,
        o=o,
        epsilon=eps,
        omega=omega,
        e_full=e_full,
        w_full=w_full,
        centralizer=cent,
        transversal=right_transversal(g, cent),
    )


def shoda_data_for_pair(
    g: FiniteGroup, h: Subgroup, k: Subgroup, p: int, r: int
) -> list[ShodaData]:
    q, _ = quotient(h, k)
    return [
        build_shoda_data(g, h, k, cls, p, r)
        for cls in cyclotomic_classes_mod(q.n, p)
    ]


def complete_shoda_data(g: FiniteGroup, p: int, r: int) -> list[ShodaData]:
    """One ShodaData per (strong Shoda pair, class), deduplicated on the
    value of the central idempotent w; raises NotStronglyMonomial if the
    kept idempotents do not sum to 1."""
    if math.gcd(p, g.n) != 1:
        raise ValueError(f"p = {p} divides |G| = {g.n}")
    base = PrimePower(p, r)
    kept: list[ShodaData] = []
    seen_w: set[GroupRingElem] = set()
    for h, k, n in _candidate_pairs(g):
        if not _condition_three(g, h, k, n, base):
            continue
        for data in shoda_data_for_pair(g, h, k, p, r):
            if data.w_full in seen_w:
                continue
            seen_w.add(data.w_full)
            kept.append(data)
    ring = GroupRing(g, base)
    total = ring.zero
    for data in kept:
        total = total + data.w_full
    if total != ring.one:
        raise NotStronglyMonomial(
            f"{g.name}: strong-Shoda idempotents sum to {total.render()} != 1 "
            f"over {base}"
        )
    return kept


def strong_shoda_pairs(g: FiniteGroup, p: int, r: int = 1):
    """Complete irredundant list of (H, K) pairs (first pair per distinct
    idempotent family)."""
    seen = []
    for data in complete_shoda_data(g, p, r):
        hk = (data.h, data.k)
        if hk not in seen:
            seen.append(hk)
    return seen
