"""Exact arithmetic in Z_{p^r} and F_p, and univariate polynomials over them.

F_p is treated uniformly as the r = 1 case of Z_{p^r}, so a single context
type `PrimePower` serves both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

MODULUS_CAP = 2**31  # keeps every coefficient product inside int64 range


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime-power factorization [(p, r), ...] with p ascending."""
    out = []
    for p in prime_factors(n):
        r = 0
        while n % p == 0:
            n //= p
            r += 1
        out.append((p, r))
    return out


def multiplicative_order(a: int, d: int) -> int:
    """Least e >= 1 with a^e = 1 mod d (d = 1 gives 1)."""
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if d == 1:
        return 1
    if math.gcd(a, d) != 1:
        raise ValueError(f"gcd({a}, {d}) != 1, order undefined")
    # order divides phi(d); strip prime factors from phi(d)
    phi = 1
    for p, r in factorize(d):
        phi *= p ** (r - 1) * (p - 1)
    e = phi
    for q in prime_factors(phi):
        while e % q == 0 and pow(a, e // q, d) == 1:
            e //= q
    return e


@dataclass(frozen=True)
class PrimePower:
    """The coefficient ring Z_{p^r}; r = 1 is the field F_p."""

    p: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.r < 1:
            raise ValueError(f"exponent must be >= 1, got {self.r}")
        if self.p**self.r > MODULUS_CAP:
            raise ValueError(f"p^r = {self.p**self.r} exceeds cap {MODULUS_CAP}")

    @property
    def modulus(self) -> int:
        return self.p**self.r

    @property
    def is_field(self) -> bool:
        return self.r == 1

    def reduce(self, v: int) -> int:
        return v % self.modulus

    def is_unit(self, v: int) -> bool:
        return v % self.p != 0

    def inv(self, v: int) -> int:
        if v % self.p == 0:
            raise NotAUnit(f"{v} is not a unit mod {self.p}^{self.r}")
        return pow(v, -1, self.modulus)

    def valuation(self, v: int) -> int:
        """p-adic valuation of v in Z_{p^r}; v = 0 maps to r."""
        v %= self.modulus
        if v == 0:
            return self.r
        k = 0
        while v % self.p == 0:
            v //= self.p
            k += 1
        return k

    def residue_field(self) -> "PrimePower":
        return PrimePower(self.p, 1)

    def one(self) -> "ZElem":
        return ZElem(1, self)

    def zero(self) -> "ZElem":
        return ZElem(0, self)

    def elem(self, v: int) -> "ZElem":
        return ZElem(v, self)

    def __repr__(self):
        return f"Z_{self.p}^{self.r}" if self.r > 1 else f"F_{self.p}"


class NotAUnit(ValueError):
    """Raised when inverting an element divisible by p."""


@dataclass(frozen=True)
class ZElem:
    """An element of Z_{p^r}, stored reduced."""

    value: int
    ctx: PrimePower

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.ctx.modulus)

    def _check(self, other: "ZElem"):
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if isinstance(other, int):
            other = ZElem(other, self.ctx)
        self._check(other)
        return ZElem(self.value + other.value, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = ZElem(other, self.ctx)
        self._check(other)
        return ZElem(self.value - other.value, self.ctx)

    def __rsub__(self, other):
        return ZElem(other, self.ctx) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = ZElem(other, self.ctx)
        self._check(other)
        return ZElem(self.value * other.value, self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        return ZElem(-self.value, self.ctx)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ZElem(pow(self.value, e, self.ctx.modulus), self.ctx)

    @property
    def is_unit(self) -> bool:
        return self.ctx.is_unit(self.value)

    def inverse(self) -> "ZElem":
        return ZElem(self.ctx.inv(self.value), self.ctx)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.ctx.modulus})"


class Poly:
    """Univariate polynomial over Z_{p^r}, coefficients lowest degree first.

    Immutable; trailing zero coefficients are stripped, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "ctx")

    def __init__(self, coeffs, ctx: PrimePower):
        vals = [c.value if isinstance(c, ZElem) else c % ctx.modulus for c in coeffs]
        vals = [v % ctx.modulus for v in vals]
        while vals and vals[-1] == 0:
            vals.pop()
        self.coeffs = tuple(vals)
        self.ctx = ctx

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.ctx))

    def _check(self, other: "Poly"):
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], self.ctx)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly([x - y for x, y in zip(a, b)], self.ctx)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.ctx)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly([c * other for c in self.coeffs], self.ctx)
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly([], self.ctx)
        m = self.ctx.modulus
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % m
        return Poly(out, self.ctx)

    __rmul__ = __mul__

    def divmod_monic(self, d: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder by a monic divisor."""
        self._check(d)
        if not d.is_monic:
            raise ValueError("divisor must be monic")
        m = self.ctx.modulus
        rem = list(self.coeffs)
        dd = d.degree
        q = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q[i - dd] = c
            for j, dc in enumerate(d.coeffs):
                rem[i - dd + j] = (rem[i - dd + j] - c * dc) % m
        return Poly(q, self.ctx), Poly(rem[:dd], self.ctx)

    def __mod__(self, d: "Poly") -> "Poly":
        return self.divmod_monic(d)[1]

    def __pow__(self, e: int) -> "Poly":
        out = Poly([1], self.ctx)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        out = Poly([1], self.ctx)
        base = self % modulus
        while e:
            if e & 1:
                out = (out * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return out

    def __call__(self, x: int) -> int:
        m = self.ctx.modulus
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def __repr__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)


def reduce_mod_p(f: Poly) -> Poly:
    """Coefficient-wise reduction Z_{p^r}[x] -> F_p[x]."""
    fp = f.ctx.residue_field()
    return Poly([c % f.ctx.p for c in f.coeffs], fp)


def _poly_gcd_fp(a: Poly, b: Poly) -> Poly:
    """Monic gcd over F_p."""
    p = a.ctx.modulus
    while not b.is_zero:
        lead_inv = pow(b.coeffs[-1], -1, p)
        b_monic = b * lead_inv
        a, b = b, a % b_monic
    if a.is_zero:
        return a
    return a * pow(a.coeffs[-1], -1, p)


def is_irreducible_fp(f: Poly) -> bool:
    """Irreducibility over F_p; exhaustive factor scan for degree <= 6,
    Rabin gcd test above."""
    if not f.ctx.is_field:
        raise ValueError("polynomial must be over F_p")
    if not f.is_monic:
        raise ValueError("polynomial must be monic")
    n = f.degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return True
    p = f.ctx.p
    if n <= 6:
        # any factorization has a monic factor of degree <= n // 2
        for d in range(1, n // 2 + 1):
            for enc in range(p**d):
                cs, e = [], enc
                for _ in range(d):
                    cs.append(e % p)
                    e //= p
                cs.append(1)
                if (f % Poly(cs, f.ctx)).is_zero:
                    return False
        return True
    x = Poly([0, 1], f.ctx)
    # f | x^{p^n} - x, and gcd(f, x^{p^{n/q}} - x) = 1 for prime q | n
    if (x.pow_mod(p**n, f) - (x % f)).coeffs != ():
        return False
    for q in prime_factors(n):
        g = _poly_gcd_fp(f, x.pow_mod(p ** (n // q), f) - (x % f))
        if g.degree != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _lex_smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    fp = PrimePower(p, 1)
    for enc in range(p**m):
        cs, e = [], enc
        for _ in range(m):
            cs.append(e % p)
            e //= p
        cs.append(1)
        cand = Poly(cs, fp)
        if is_irreducible_fp(cand):
            return cand.coeffs
    raise AssertionError("no irreducible found")  # cannot happen


def find_basic_irreducible(ctx: PrimePower, m: int) -> Poly:
    """Monic degree-m polynomial over Z_{p^r} whose mod-p reduction is the
    lexicographically smallest monic irreducible of degree m over F_p.

    "Smallest" orders coefficient vectors (a_0, ..., a_{m-1}) by the integer
    sum(a_i * p^i); coefficients are lifted verbatim to {0, ..., p-1}.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    return Poly(_lex_smallest_irreducible(ctx.p, m), ctx)
