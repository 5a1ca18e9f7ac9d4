"""Group rings R[G] for R = Z_{p^r} (r = 1 giving F_p) over Cayley-table
groups: sparse arithmetic, hat idempotents, conjugation, mod-p reduction and
lifting, nilpotency index of near-idempotents, and exact unit orders.
"""

from __future__ import annotations

from .groups import FiniteGroup, Subgroup
from .linalg import ZModOps, det_is_unit, solve
from .modring import NotAUnit, PrimePower


class GroupRing:
    """Context object |G| x Z_{p^r}; elements are sparse coefficient maps."""

    def __init__(self, group: FiniteGroup, base: PrimePower):
        self.group = group
        self.base = base

    def __eq__(self, other):
        return (
            isinstance(other, GroupRing)
            and self.group is other.group
            and self.base == other.base
        )

    def __hash__(self):
        return hash((id(self.group), self.base))

    def __repr__(self):
        return f"{self.base}[{self.group.name}]"

    def elem(self, coeffs: dict) -> "GroupRingElem":
        return GroupRingElem(self, coeffs)

    @property
    def zero(self) -> "GroupRingElem":
        return GroupRingElem(self, {})

    @property
    def one(self) -> "GroupRingElem":
        return GroupRingElem(self, {0: 1})

    def scalar(self, c: int) -> "GroupRingElem":
        return GroupRingElem(self, {0: c})

    def basis(self, g: int) -> "GroupRingElem":
        """The group element g as a ring element."""
        return GroupRingElem(self, {g: 1})

    def from_vector(self, vec) -> "GroupRingElem":
        return GroupRingElem(self, {i: c for i, c in enumerate(vec)})

    def hat(self, h: Subgroup) -> "GroupRingElem":
        """|H|^{-1} sum of the elements of H; idempotent when |H| is
        invertible in the base."""
        if h.parent is not self.group:
            raise ValueError("subgroup belongs to a different group")
        c = self.base.inv(h.order)
        return GroupRingElem(self, {x: c for x in h.elems})

    def hat_unnormalized(self, h: Subgroup) -> "GroupRingElem":
        return GroupRingElem(self, {x: 1 for x in h.elems})

    def reduce_ring(self) -> "GroupRing":
        return GroupRing(self.group, self.base.residue_field())

    def lift_ring(self, r: int) -> "GroupRing":
        return GroupRing(self.group, PrimePower(self.base.p, r))


class GroupRingElem:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GroupRing, coeffs: dict):
        mod = ring.base.modulus
        self.ring = ring
        self.coeffs = {g: v % mod for g, v in coeffs.items() if v % mod}

    def _check(self, other: "GroupRingElem"):
        if self.ring != other.ring:
            raise ValueError("group ring mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElem)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def support(self):
        return self.coeffs.keys()

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        self._check(other)
        out = dict(self.coeffs)
        for g, v in other.coeffs.items():
            out[g] = out.get(g, 0) + v
        return GroupRingElem(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        self._check(other)
        out = dict(self.coeffs)
        for g, v in other.coeffs.items():
            out[g] = out.get(g, 0) - v
        return GroupRingElem(self.ring, out)

    def __rsub__(self, other):
        return self.ring.scalar(other) - self

    def __neg__(self):
        return GroupRingElem(self.ring, {g: -v for g, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElem(
                self.ring, {g: v * other for g, v in self.coeffs.items()}
            )
        self._check(other)
        table = self.ring.group.table
        mod = self.ring.base.modulus
        out: dict[int, int] = {}
        for g, a in self.coeffs.items():
            row = table[g]
            for h, b in other.coeffs.items():
                k = row[h]
                out[k] = (out.get(k, 0) + a * b) % mod
        return GroupRingElem(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GroupRingElem":
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self, g: int) -> "GroupRingElem":
        """Coefficient of x moves to g^{-1} x g."""
        grp = self.ring.group
        return GroupRingElem(
            self.ring, {grp.conj(x, g): v for x, v in self.coeffs.items()}
        )

    def is_central(self) -> bool:
        grp = self.ring.group
        return all(self.conjugate(g) == self for g in range(grp.n))

    def reduce(self) -> "GroupRingElem":
        """Coefficient-wise reduction to F_p G."""
        return GroupRingElem(self.ring.reduce_ring(), self.coeffs)

    def lift_to(self, r: int) -> "GroupRingElem":
        """Lift F_p G -> Z_{p^r} G with coefficients kept in {0..p-1}."""
        return GroupRingElem(self.ring.lift_ring(r), self.coeffs)

    def to_vector(self) -> list[int]:
        return [self.coeffs.get(i, 0) for i in range(self.ring.group.n)]

    def regular_matrix(self) -> list[list[int]]:
        """Matrix of left multiplication x -> self * x in the group basis."""
        n = self.ring.group.n
        table = self.ring.group.table
        mod = self.ring.base.modulus
        mat = [[0] * n for _ in range(n)]
        for g, a in self.coeffs.items():
            row = table[g]
            for j in range(n):
                t = row[j]
                mat[t][j] = (mat[t][j] + a) % mod
        return mat

    @property
    def is_unit(self) -> bool:
        """Unit test via the regular representation over the residue field."""
        red = self.reduce()
        ops = ZModOps(red.ring.base)
        return det_is_unit(red.regular_matrix(), ops)

    def inverse(self) -> "GroupRingElem":
        if not self.is_unit:
            raise NotAUnit("group-ring element is not a unit")
        n = self.ring.group.n
        rhs = [1 if i == 0 else 0 for i in range(n)]
        vec = solve(self.regular_matrix(), rhs, ZModOps(self.ring.base))
        inv = self.ring.from_vector(vec)
        assert self * inv == self.ring.one and inv * self == self.ring.one
        return inv

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        names = self.ring.group.names
        terms = []
        for g in sorted(self.coeffs):
            c = self.coeffs[g]
            terms.append(str(c) if g == 0 else f"{c}*{names[g]}")
        return " + ".join(terms)

    def __repr__(self):
        return self.render()


def nilpotency_index(a: GroupRingElem) -> int:
    """Least n >= 1 with (a - a^2)^n = 0; requires a idempotent mod p.

    Bounded by r since a - a^2 has every coefficient divisible by p.
    """
    nu = a * a - a
    if nu.reduce():
        raise ValueError("element is not idempotent mod p")
    n = 1
    x = nu
    while x:
        x = x * nu
        n += 1
        if n > a.ring.base.r:
            raise AssertionError("nilpotency index exceeded r")  # cannot happen
    return n


def unit_order(u: GroupRingElem, bound: int = 10**7) -> int:
    """Exact multiplicative order of a unit of Z_{p^r}G.

    Computed as l * p^t: l is the order of the mod-p reduction (power
    iteration), then u^l is unipotent and t counts p-th powerings to 1.
    """
    red = u.reduce()
    if not red.is_unit:
        raise NotAUnit("reduction mod p is not a unit")
    one_red = red.ring.one
    x = red
    l = 1
    while x != one_red:
        x = x * red
        l += 1
        if l > bound:
            raise RuntimeError(f"order exceeds bound {bound}")
    base = u.ring.base
    if base.r == 1:
        return l
    order = l
    v = u**l
    one = u.ring.one
    while v != one:
        v = v**base.p
        order *= base.p
        if order > l * base.modulus:
            raise AssertionError("unipotent order runaway")  # cannot happen
    return order
