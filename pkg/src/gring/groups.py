"""Finite groups as Cayley tables, with subgroup machinery.

Element 0 is always the identity.  Groups are immutable after construction
and capped at order 200 (tables are dense n x n).
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

ORDER_CAP = 200


class GroupConstructionError(ValueError):
    pass


def _validate_table(table, names):
    n = len(table)
    if n == 0 or n > ORDER_CAP:
        raise GroupConstructionError(f"group order must be in 1..{ORDER_CAP}")
    rng = set(range(n))
    for i, row in enumerate(table):
        if len(row) != n or set(row) != rng:
            raise GroupConstructionError(f"row {i} is not a permutation of 0..{n-1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != rng:
            raise GroupConstructionError(f"column {j} is not a permutation")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise GroupConstructionError("element 0 is not a two-sided identity")
    # associativity spot-check; deterministic seed for reproducibility
    rnd = random.Random(0xC0FFEE + n)
    triples = (
        itertools.product(range(n), repeat=3)
        if n**3 <= 4096
        else ((rnd.randrange(n), rnd.randrange(n), rnd.randrange(n)) for _ in range(4096))
    )
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupConstructionError(f"associativity fails at ({a},{b},{c})")


class FiniteGroup:
    """Cayley-table group; table[g][h] is the index of g*h."""

    def __init__(self, table, names=None, name="G", validate=True):
        self.table = tuple(tuple(row) for row in table)
        self.n = len(self.table)
        if self.n == 0 or self.n > ORDER_CAP:
            raise GroupConstructionError(f"group order must be in 1..{ORDER_CAP}")
        self.names = list(names) if names else [f"e{i}" for i in range(self.n)]
        self.name = name
        if validate:
            _validate_table(self.table, self.names)
        inv = [None] * self.n
        for i in range(self.n):
            for j in range(self.n):
                if self.table[i][j] == 0:
                    inv[i] = j
                    break
            if inv[i] is None or self.table[inv[i]][i] != 0:
                raise GroupConstructionError(f"element {i} has no two-sided inverse")
        self.inverse = tuple(inv)
        self._subgroups = None

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"{self.name} (order {self.n})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, x: int, g: int) -> int:
        """g^{-1} x g."""
        return self.table[self.table[self.inverse[g]][x]][g]

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse[a], -e
        out = 0
        while e:
            if e & 1:
                out = self.table[out][a]
            a = self.table[a][a]
            e >>= 1
        return out

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )

    def closure(self, gens) -> frozenset[int]:
        """Subgroup generated by gens (indices)."""
        elems = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return frozenset(elems)

    def subgroup(self, elems) -> "Subgroup":
        return Subgroup(self, elems)

    def generated(self, gens) -> "Subgroup":
        return Subgroup(self, self.closure(gens))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.n))

    def subgroups(self) -> list["Subgroup"]:
        """All subgroups, by closing generating sets grown one cyclic
        generator at a time; sorted by order then element tuple."""
        if self._subgroups is None:
            found = {frozenset([0])}
            frontier = [frozenset([0])]
            while frontier:
                nxt = []
                for s in frontier:
                    for g in range(1, self.n):
                        if g in s:
                            continue
                        t = self.closure(set(s) | {g})
                        if t not in found:
                            found.add(t)
                            nxt.append(t)
                frontier = nxt
            self._subgroups = sorted(
                (Subgroup(self, s) for s in found),
                key=lambda h: (h.order, h.elems),
            )
        return self._subgroups

    def centralizer_of(self, elems) -> "Subgroup":
        out = [
            g
            for g in range(self.n)
            if all(self.table[g][x] == self.table[x][g] for x in elems)
        ]
        return Subgroup(self, out)

    def center(self) -> "Subgroup":
        return self.centralizer_of(range(self.n))


class Subgroup:
    """Subgroup given by a sorted index set; validated at construction."""

    def __init__(self, parent: FiniteGroup, elems):
        self.parent = parent
        self.elems = tuple(sorted(set(elems)))
        self._set = frozenset(self.elems)
        if 0 not in self._set:
            raise GroupConstructionError("subgroup must contain the identity")
        for a in self.elems:
            if parent.inverse[a] not in self._set:
                raise GroupConstructionError("subgroup not closed under inverse")
            for b in self.elems:
                if parent.table[a][b] not in self._set:
                    raise GroupConstructionError("subgroup not closed under product")
        if parent.n % len(self.elems) != 0:
            raise GroupConstructionError("Lagrange violation")  # unreachable

    @property
    def order(self) -> int:
        return len(self.elems)

    def __contains__(self, g: int) -> bool:
        return g in self._set

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self._set == other._set
        )

    def __hash__(self):
        return hash((id(self.parent), self._set))

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __lt__(self, other: "Subgroup") -> bool:
        return self._set < other._set

    def __repr__(self):
        return f"Subgroup(order {self.order} of {self.parent.name})"

    def is_normal_in(self, other: "Subgroup") -> bool:
        g = self.parent
        return all(g.conj(x, t) in self._set for t in other.elems for x in self.elems)


class Transversal:
    """Right-coset representatives of a subgroup; reps[0] is the identity."""

    def __init__(self, parent: FiniteGroup, subgroup: Subgroup, reps):
        self.parent = parent
        self.subgroup = subgroup
        self.reps = tuple(reps)


def normalizer(g: FiniteGroup, k: Subgroup) -> Subgroup:
    out = [
        x
        for x in range(g.n)
        if all(g.conj(h, x) in k for h in k.elems)
    ]
    return Subgroup(g, out)


def right_transversal(g: FiniteGroup, c: Subgroup) -> Transversal:
    covered = [False] * g.n
    reps = []
    for x in range(g.n):
        if not covered[x]:
            reps.append(x)
            for h in c.elems:
                covered[g.table[h][x]] = True
    return Transversal(g, c, reps)


def quotient(h: Subgroup, k: Subgroup):
    """The quotient H/K with its projection.

    Returns (Q, proj) where Q is a FiniteGroup on the cosets (identity coset
    first, then by smallest member) and proj maps an H-element index to its
    coset index in Q.
    """
    if not k <= h:
        raise ValueError("K must be contained in H")
    if not k.is_normal_in(h):
        raise ValueError("K must be normal in H for the quotient")
    g = h.parent
    seen = {}
    reps = []
    for x in h.elems:
        if x in seen:
            continue
        coset = sorted(g.table[a][x] for a in k.elems)
        for y in coset:
            seen[y] = len(reps)
        reps.append(coset[0])
    proj = {x: seen[x] for x in h.elems}
    m = len(reps)
    table = [[proj[g.table[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    names = [f"[{g.names[r]}]" for r in reps]
    q = FiniteGroup(table, names, name=f"{g.name}-quotient", validate=False)
    return q, proj


def is_cyclic(g: FiniteGroup):
    """(True, generator index) if cyclic, else (False, None)."""
    for x in range(g.n):
        if g.order_of(x) == g.n:
            return True, x
    return False, None


def minimal_normal_over(h: Subgroup, k: Subgroup) -> list[Subgroup]:
    """Minimal subgroups L with K < L normal in H."""
    g = h.parent
    cands = [
        s
        for s in g.subgroups()
        if k < s and s <= h and s.is_normal_in(h)
    ]
    return [s for s in cands if not any(t < s for t in cands)]


# ---------------------------------------------------------------------------
# constructors


def cyclic(n: int, name=None) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, names, name or f"C{n}", validate=False)


_LETTERS = "abcdefgh"


def abelian(invariants) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    invs = [int(d) for d in invariants if int(d) > 1] or [1]
    if any(d < 1 for d in invs):
        raise GroupConstructionError("invariants must be positive")
    tuples = list(itertools.product(*[range(d) for d in invs]))
    index = {t: i for i, t in enumerate(tuples)}
    table = [
        [index[tuple((a + b) % d for a, b, d in zip(x, y, invs))] for y in tuples]
        for x in tuples
    ]

    def nm(t):
        parts = [
            _LETTERS[i] if e == 1 else f"{_LETTERS[i]}^{e}"
            for i, e in enumerate(t)
            if e
        ]
        return "*".join(parts) if parts else "1"

    name = "x".join(f"C{d}" for d in invs)
    return FiniteGroup(table, [nm(t) for t in tuples], name, validate=False)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order."""
    if order % 2 or order < 2:
        raise GroupConstructionError("dihedral order must be even and >= 2")
    m = order // 2

    def mul(x, y):
        f1, i1 = divmod(x, m)
        f2, i2 = divmod(y, m)
        if f2:
            return (1 - f1) * m + (i2 - i1) % m
        return f1 * m + (i1 + i2) % m

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    names = []
    for f in range(2):
        for i in range(m):
            r = "1" if i == 0 else ("r" if i == 1 else f"r^{i}")
            names.append(r if f == 0 else ("s" if i == 0 else f"s*{r}"))
    return FiniteGroup(table, names, f"D{order}", validate=False)


def dicyclic(order: int) -> FiniteGroup:
    """Dicyclic group of order 4m: a^{2m}=1, b^2=a^m, b^{-1}ab=a^{-1}."""
    if order % 4 or order < 8:
        raise GroupConstructionError("dicyclic order must be a multiple of 4, >= 8")
    m2 = order // 2  # order of a

    def mul(x, y):
        i1, f1 = divmod(x, 2)
        i2, f2 = divmod(y, 2)
        j = (i1 + (-i2 if f1 else i2)) % m2
        if f1 and f2:
            return ((j + m2 // 2) % m2) * 2
        return j * 2 + (f1 ^ f2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    names = []  # element x = a^{x//2} b^{x%2}
    for i in range(m2):
        a = "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
        names.append(a)
        names.append("b" if i == 0 else f"{a}*b")
    return FiniteGroup(table, names, f"Dic{order}", validate=False)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupConstructionError("symmetric group supported for n in 1..5")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # apply p, then q
        return tuple(q[p[i]] for i in range(n))

    table = [[index[compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_name(p) for p in perms], f"S{n}", validate=False)


def extraspecial27() -> FiniteGroup:
    """The extraspecial group of order 27 and exponent 3:
    a^3=b^3=c^3=1, ac=ca, bc=cb, b^-1 a b = a c^-1."""
    tuples = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
    index = {t: i for i, t in enumerate(tuples)}

    def mul(x, y):
        i1, j1, k1 = x
        i2, j2, k2 = y
        return ((i1 + i2) % 3, (j1 + j2) % 3, (k1 + k2 + j1 * i2) % 3)

    table = [[index[mul(x, y)] for y in tuples] for x in tuples]

    def nm(t):
        parts = []
        for s, e in zip("abc", t):
            if e == 1:
                parts.append(s)
            elif e == 2:
                parts.append(f"{s}^2")
        return "*".join(parts) if parts else "1"

    return FiniteGroup(table, [nm(t) for t in tuples], "ES27", validate=False)


def semidirect_cyclic(n: int, m: int, s: int) -> FiniteGroup:
    """C_n x| C_m with the generator of C_m acting by a -> a^s."""
    if pow(s, m, n) != 1 % n:
        raise GroupConstructionError(f"s^m = {pow(s, m, n)} != 1 mod {n}")
    tuples = [(i, j) for j in range(m) for i in range(n)]
    index = {t: i for i, t in enumerate(tuples)}

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        return ((i1 + i2 * pow(s, j1, n)) % n, (j1 + j2) % m)

    table = [[index[mul(x, y)] for y in tuples] for x in tuples]

    def nm(t):
        i, j = t
        pa = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        pb = "" if j == 0 else ("b" if j == 1 else f"b^{j}")
        return "*".join(x for x in (pa, pb) if x) or "1"

    return FiniteGroup(table, [nm(t) for t in tuples], f"C{n}:C{m}", validate=False)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    pairs = [(x, y) for x in range(g.n) for y in range(h.n)]
    index = {t: i for i, t in enumerate(pairs)}
    table = [
        [index[(g.table[x1][x2], h.table[y1][y2])] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]

    def nm(t):
        a, b = g.names[t[0]], h.names[t[1]]
        if a == "1":
            return b
        if b == "1":
            return a
        return f"{a}|{b}"

    return FiniteGroup(
        table, [nm(t) for t in pairs], f"{g.name}x{h.name}", validate=False
    )


# ---------------------------------------------------------------------------
# permutation and file input


def _cycle_name(perm) -> str:
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def parse_cycles(line: str, npoints: int | None = None):
    """Parse cycle notation like "(1 2 3)(4 5)" into a permutation tuple.

    Points are 1-based in the input; commas are accepted as separators.
    """
    import re

    cycles = re.findall(r"\(([^()]*)\)", line)
    if not cycles and line.strip():
        raise GroupConstructionError(f"cannot parse permutation: {line!r}")
    pts = []
    parsed = []
    for c in cycles:
        body = [int(t) for t in c.replace(",", " ").split()]
        if any(t < 1 for t in body):
            raise GroupConstructionError("cycle points are 1-based")
        parsed.append(body)
        pts.extend(body)
    if len(pts) != len(set(pts)):
        raise GroupConstructionError(f"cycles are not disjoint in {line!r}")
    size = npoints or (max(pts) if pts else 1)
    perm = list(range(size))
    for body in parsed:
        for a, b in zip(body, body[1:] + body[:1]):
            perm[a - 1] = b - 1
    return tuple(perm)


def from_permutations(lines, name="PermGroup") -> FiniteGroup:
    """Group generated by permutations, one per line in cycle notation."""
    raw = [ln for ln in lines if ln.strip()]
    if not raw:
        raise GroupConstructionError("no generators given")
    size = 0
    for ln in raw:
        p = parse_cycles(ln)
        size = max(size, len(p))
    gens = [parse_cycles(ln, size) for ln in raw]

    def compose(p, q):
        return tuple(q[p[i]] for i in range(size))

    ident = tuple(range(size))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in elems:
                    if len(elems) >= ORDER_CAP:
                        raise GroupConstructionError(
                            f"generated group exceeds order cap {ORDER_CAP}"
                        )
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    perms = sorted(elems)  # identity is lex-smallest
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_name(p) for p in perms], name, validate=False)


def from_cayley_table(text: str, name="FileGroup") -> FiniteGroup:
    """Cayley-table format: line 1 is n, then n rows of n 0-based indices."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GroupConstructionError("empty Cayley-table file")
    n = int(lines[0])
    if len(lines) != n + 1:
        raise GroupConstructionError(f"expected {n} table rows, got {len(lines) - 1}")
    table = [[int(t) for t in ln.split()] for ln in lines[1:]]
    return FiniteGroup(table, None, name, validate=True)


@lru_cache(maxsize=None)
def _registry_group(key: str) -> FiniteGroup:
    if key == "es27":
        return extraspecial27()
    if key.startswith("s") and key[1:].isdigit():
        return symmetric(int(key[1:]))
    if key.startswith("d") and key[1:].isdigit():
        return dihedral(int(key[1:]))
    if key.startswith("q") and key[1:].isdigit():
        return dicyclic(int(key[1:]))
    if key.startswith("a4"):
        return from_permutations(["(1 2 3)", "(2 3 4)"], name="A4")
    if key.startswith("f20"):
        return semidirect_cyclic(5, 4, 2)
    if key.startswith("f21"):
        return semidirect_cyclic(7, 3, 2)
    parts = key.split("x")
    if parts and all(p.startswith("c") and p[1:].isdigit() for p in parts):
        orders = [int(p[1:]) for p in parts]
        if len(orders) == 1:
            return cyclic(orders[0])
        g = abelian(orders)
        g.name = "x".join(f"C{d}" for d in orders)
        return g
    raise GroupConstructionError(f"unknown group spec {key!r}")


def build_group(spec: str) -> FiniteGroup:
    """Build a registry group from a short name: c5, c5xc5, s4, d8, q8,
    a4, f20, f21, es27, ..."""
    return _registry_group(spec.strip().lower())
