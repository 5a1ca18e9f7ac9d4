"""Galois rings GR(p^r, m) = Z_{p^r}[x]/(h) with Frobenius, trace/norm,
Teichmuller representatives, unit generators, normal elements, and
norm-equation solving.

The residue field is F_{p^m}; an element is a unit iff its mod-p reduction
is nonzero.  The Frobenius of a subring extension acts on the Teichmuller
p-adic digits (the coefficient-wise power map is not a ring map for r > 1).
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import ElemOps, ZModOps, det_is_unit, solve
from .modring import (
    NotAUnit,
    Poly,
    PrimePower,
    find_basic_irreducible,
    is_irreducible_fp,
    prime_factors,
    reduce_mod_p,
)


class GaloisRing:
    """GR(p^r, m) presented by a monic basic irreducible h of degree m."""

    def __init__(self, ctx: PrimePower, m: int, h: Poly):
        if h.ctx != ctx:
            raise ValueError("modulus polynomial context mismatch")
        if h.degree != m or not h.is_monic:
            raise ValueError(f"h must be monic of degree {m}")
        if not is_irreducible_fp(reduce_mod_p(h)):
            raise ValueError("h is not basic irreducible (mod-p reduction factors)")
        self.ctx = ctx
        self.m = m
        self.h = h
        mod = ctx.modulus
        # fully reduced rows for x^{m+i}, i = 0..m-2
        rows = []
        if m > 1:
            red0 = [(-c) % mod for c in h.coeffs[:m]]
            rows.append(red0)
            for _ in range(1, m - 1):
                prev = rows[-1]
                over = prev[m - 1]
                rows.append(
                    [over * red0[0] % mod]
                    + [(prev[t - 1] + over * red0[t]) % mod for t in range(1, m)]
                )
        self._red = rows
        self._teich_gen = None
        self._unit_factors = None

    # -- identity / construction ------------------------------------------

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def r(self) -> int:
        return self.ctx.r

    @property
    def size(self) -> int:
        return self.ctx.modulus**self.m

    @property
    def unit_count(self) -> int:
        return self.p ** ((self.r - 1) * self.m) * (self.p**self.m - 1)

    def __eq__(self, other):
        return (
            isinstance(other, GaloisRing)
            and self.ctx == other.ctx
            and self.m == other.m
            and self.h == other.h
        )

    def __hash__(self):
        return hash((self.ctx, self.m, self.h))

    def __repr__(self):
        return f"GR({self.ctx.modulus}, deg {self.m})"

    def elem(self, coeffs) -> "GrElem":
        cs = list(coeffs)
        cs += [0] * (self.m - len(cs))
        return GrElem(self, cs[: self.m])

    def scalar(self, c: int) -> "GrElem":
        return self.elem([c])

    @property
    def zero(self) -> "GrElem":
        return self.scalar(0)

    @property
    def one(self) -> "GrElem":
        return self.scalar(1)

    @property
    def xi(self) -> "GrElem":
        if self.m == 1:
            # degree-1 modulus x + h0: the class of x is -h0
            return self.scalar(-self.h.coeffs[0])
        return self.elem([0, 1])

    def encode(self, a: "GrElem") -> int:
        mod = self.ctx.modulus
        code = 0
        for c in reversed(a.coeffs):
            code = code * mod + c
        return code

    def decode(self, code: int) -> "GrElem":
        mod = self.ctx.modulus
        cs = []
        for _ in range(self.m):
            cs.append(code % mod)
            code //= mod
        return GrElem(self, cs)

    def elements(self):
        for code in range(self.size):
            yield self.decode(code)

    # -- Teichmuller structure ---------------------------------------------

    def teichmuller_lift(self, a: "GrElem") -> "GrElem":
        """The unique Teichmuller representative congruent to a mod p."""
        return a ** (self.p ** (self.m * (self.r - 1)))

    def teichmuller_generator(self) -> "GrElem":
        """First element in coefficient-lex order of multiplicative order
        exactly p^m - 1."""
        if self._teich_gen is None:
            want = self.p**self.m - 1
            for code in range(1, self.size):
                cand = self.decode(code)
                if not cand.is_unit:
                    continue
                if cand.order() == want:
                    self._teich_gen = cand
                    break
            else:
                raise AssertionError("no Teichmuller generator found")
        return self._teich_gen

    def teich_digits(self, a: "GrElem") -> list["GrElem"]:
        """Digits t_i with a = sum p^i t_i, each t_i Teichmuller."""
        mod = self.ctx.modulus
        digits = []
        x = a
        for _ in range(self.r):
            t = self.teichmuller_lift(x)
            digits.append(t)
            x = GrElem(self, [((c - d) % mod) // self.p for c, d in zip(x.coeffs, t.coeffs)])
        return digits

    def subring(self, l: int) -> "SubringDescriptor":
        return SubringDescriptor(self, l)

    def unit_group_generators(self) -> list["GrElem"]:
        """Generating set of U(R): the Teichmuller generator plus the
        standard one-unit basis (with the extra -1 and 1+4*xi^j layer at
        p = 2, r >= 3).  Certified by BFS closure at desk scale, not assumed.
        """
        p, r, m = self.p, self.r, self.m
        gens = [self.teichmuller_generator()]
        for j in range(m):
            cs = [0] * m
            cs[j] = p
            cs[0] += 1
            gens.append(self.elem(cs))
        if p == 2 and r >= 3:
            gens.append(-self.one)
            for j in range(m):
                cs = [0] * m
                cs[j] = 4
                cs[0] += 1
                gens.append(self.elem(cs))
        return gens

    def _unit_prime_factors(self):
        if self._unit_factors is None:
            fs = set(prime_factors(self.p**self.m - 1))
            if self.r > 1:
                fs.add(self.p)
            self._unit_factors = sorted(fs)
        return self._unit_factors


@lru_cache(maxsize=None)
def canonical_ring(p: int, r: int, m: int) -> GaloisRing:
    """GR(p^r, m) over the canonical (lex-smallest) basic irreducible."""
    ctx = PrimePower(p, r)
    return GaloisRing(ctx, m, find_basic_irreducible(ctx, m))


class GrElem:
    """Element of a Galois ring as a coefficient vector over 1, xi, ...,
    xi^{m-1}."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs):
        mod = ring.ctx.modulus
        self.ring = ring
        self.coeffs = tuple(c % mod for c in coeffs)
        if len(self.coeffs) != ring.m:
            raise ValueError(f"expected {ring.m} coefficients, got {len(self.coeffs)}")

    def _check(self, other: "GrElem"):
        if self.ring != other.ring:
            raise ValueError("Galois ring mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, GrElem)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        self._check(other)
        return GrElem(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        self._check(other)
        return GrElem(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return self.ring.scalar(other) - self

    def __neg__(self):
        return GrElem(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return GrElem(self.ring, [a * other for a in self.coeffs])
        self._check(other)
        m = self.ring.m
        mod = self.ring.ctx.modulus
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] = (prod[i + j] + a * b) % mod
        red = self.ring._red
        out = prod[:m]
        for idx in range(m, 2 * m - 1):
            c = prod[idx]
            if c == 0:
                continue
            row = red[idx - m]
            for t in range(m):
                out[t] = (out[t] + c * row[t]) % mod
        return GrElem(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GrElem":
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

    @property
    def is_unit(self) -> bool:
        return any(c % self.ring.p for c in self.coeffs)

    def inverse(self) -> "GrElem":
        if not self.is_unit:
            raise NotAUnit(f"{self} is not a unit of {self.ring}")
        return self ** (self.ring.unit_count - 1)

    def order(self) -> int:
        """Multiplicative order (units only)."""
        if not self.is_unit:
            raise NotAUnit(f"{self} is not a unit of {self.ring}")
        n = self.ring.unit_count
        one = self.ring.one
        for q in self.ring._unit_prime_factors():
            while n % q == 0 and self ** (n // q) == one:
                n //= q
        return n

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "xi" if i == 1 else f"xi^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms) if terms else "0"


class SubringDescriptor:
    """The subring S = GR(p^r, l) inside R = GR(p^r, m), l | m.

    S is the span of the Teichmuller subfield generator
    zeta_sub = zeta^((p^m-1)/(p^l-1)); the Frobenius zeta -> zeta^{p^l}
    fixes exactly S and generates Gal(R/S) of order m/l.
    """

    def __init__(self, parent: GaloisRing, l: int):
        if parent.m % l != 0 or l < 1:
            raise ValueError(f"{l} does not divide extension degree {parent.m}")
        self.parent = parent
        self.l = l
        p, m = parent.p, parent.m
        self.gal_order = m // l
        zeta = parent.teichmuller_generator()
        self.zeta_sub = zeta ** ((p**m - 1) // (p**l - 1))
        self._ops = ZModOps(parent.ctx)
        # columns: coordinates of zeta_sub^i in the xi-power basis of R
        self._basis_matrix = [
            [(self.zeta_sub**i).coeffs[t] for i in range(l)] for t in range(m)
        ]
        mp = solve(self._basis_matrix, list((self.zeta_sub**l).coeffs), self._ops)
        mod = parent.ctx.modulus
        minpoly = Poly([(-c) % mod for c in mp] + [1], parent.ctx)
        self.ring = GaloisRing(parent.ctx, l, minpoly)

    def __repr__(self):
        return f"GR({self.parent.ctx.modulus}, deg {self.l}) in {self.parent}"

    def embed(self, s: GrElem) -> GrElem:
        """S-element (over self.ring) into R."""
        if s.ring != self.ring:
            raise ValueError("element is not over the subring presentation")
        out = self.parent.zero
        for i, c in enumerate(s.coeffs):
            out = out + self.zeta_sub**i * c
        return out

    def project(self, a: GrElem) -> GrElem:
        """R-element lying in embedded S, as an element of self.ring."""
        coords = solve(self._basis_matrix, list(a.coeffs), self._ops)
        return self.ring.elem(coords)

    def contains(self, a: GrElem) -> bool:
        try:
            self.project(a)
            return True
        except ValueError:
            return False


def frobenius(a: GrElem, sub: SubringDescriptor) -> GrElem:
    """Generator of Gal(R/S): raises each Teichmuller digit to p^l."""
    ring = a.ring
    if ring != sub.parent:
        raise ValueError("element not in the descriptor's parent ring")
    e = ring.p**sub.l
    out = ring.zero
    scale = 1
    for t in ring.teich_digits(a):
        out = out + (t**e) * scale
        scale *= ring.p
    return out


def frobenius_iter(a: GrElem, sub: SubringDescriptor, k: int) -> GrElem:
    """sigma^k for sigma = frobenius(., sub)."""
    k %= sub.gal_order
    for _ in range(k):
        a = frobenius(a, sub)
    return a


def trace(a: GrElem, sub: SubringDescriptor) -> GrElem:
    out = a.ring.zero
    x = a
    for _ in range(sub.gal_order):
        out = out + x
        x = frobenius(x, sub)
    return out


def norm(a: GrElem, sub: SubringDescriptor) -> GrElem:
    out = a.ring.one
    x = a
    for _ in range(sub.gal_order):
        out = out * x
        x = frobenius(x, sub)
    return out


def trace_and_norm(a: GrElem, sub: SubringDescriptor) -> tuple[GrElem, GrElem]:
    return trace(a, sub), norm(a, sub)


def normal_element(ring: GaloisRing, sub: SubringDescriptor) -> GrElem:
    """A Teichmuller beta whose sigma-orbit is an S-basis of R, certified by
    a unit determinant of the conjugate matrix [sigma^{i+j}(beta)]."""
    if sub.l >= ring.m:
        raise ValueError("subring must be proper for a normal element")
    n = sub.gal_order
    p, l = ring.p, sub.l
    zeta = ring.teichmuller_generator()
    ops = ElemOps(ring.zero, ring.one)
    for j in range(1, p**ring.m - 1):
        beta = zeta**j
        conj = [beta ** (p ** (l * i) % (p**ring.m - 1)) for i in range(n)]
        mat = [[conj[(i + k) % n] for k in range(n)] for i in range(n)]
        if det_is_unit(mat, ops):
            return beta
    raise AssertionError("no normal element found")  # existence is guaranteed


def solve_matrix_unit_coefficients(
    ring: GaloisRing,
    sub: SubringDescriptor,
    beta: GrElem,
    frob_power: int = 1,
) -> list[GrElem]:
    """Coefficients a_0..a_{l-1} with sum_i a_i sigma^{i+j}(beta) equal to
    trace(beta) for j = 0 and beta - sigma^j(beta) for j > 0, where sigma is
    the frob_power-th Frobenius of R over S (of order l).

    The linear map sum_i a_i sigma^i then sends the normal basis
    {sigma^j(beta)} onto the all-ones first row / first column, -1 diagonal
    pattern, which conjugates the averaging idempotent into a corner matrix
    unit.  The conjugate matrix is invertible exactly when beta is normal.
    """
    l = sub.gal_order

    def sigma(x, k):
        return frobenius_iter(x, sub, frob_power * k)

    mat = [[sigma(beta, i + j) for i in range(l)] for j in range(l)]
    rhs = [sum((sigma(beta, i) for i in range(1, l + 1)), ring.zero)]
    for j in range(1, l):
        rhs.append(beta - sigma(beta, j))
    return solve(mat, rhs, ElemOps(ring.zero, ring.one))


def solve_norm_equation(
    ring: GaloisRing, sub: SubringDescriptor, target: GrElem
) -> GrElem:
    """Some a in R with norm(a, sub) = target (target a unit in embedded S).

    Deterministic: the Teichmuller component is matched first, then the
    unipotent part is scanned in coefficient-lex order.
    """
    if target.ring != ring:
        raise ValueError("target must be given inside the parent ring")
    if not target.is_unit:
        raise NotAUnit("norm equation target must be a unit")
    if not sub.contains(target):
        raise ValueError("target does not lie in the subring")
    if sub.gal_order == 1:
        return target
    p, r, m = ring.p, ring.r, ring.m
    zeta = ring.teichmuller_generator()
    t0 = ring.teichmuller_lift(target)
    k = 0
    acc = ring.one
    while acc != t0:
        acc = acc * sub.zeta_sub
        k += 1
        if k > p**sub.l - 1:
            raise AssertionError("Teichmuller part of target not in subring")
    a0 = zeta**k
    rest = target * norm(a0, sub).inverse()
    if rest == ring.one:
        return a0
    if r == 1:
        raise AssertionError("residue-field norm mismatch")  # cannot happen
    span = p ** (r - 1)
    for code in range(span**m):
        cs, e = [], code
        for _ in range(m):
            cs.append(e % span)
            e //= span
        u = ring.one + ring.elem(cs) * p
        if norm(u, sub) == rest:
            return a0 * u
    raise AssertionError("norm equation scan exhausted")  # surjectivity guaranteed
