"""Built-in verification corpus: the groups of order <= 24 constructible
from the registry families (all abelian types, dihedral, dicyclic,
symmetric, alternating, Frobenius, a few semidirect products and direct
products), plus C5 x C5 and the extraspecial group of order 27."""

from __future__ import annotations

from functools import lru_cache

from .groups import (
    FiniteGroup,
    abelian,
    dicyclic,
    dihedral,
    direct_product,
    extraspecial27,
    from_permutations,
    semidirect_cyclic,
    symmetric,
)
from .modring import factorize

PRIME_CONTEXTS = [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1)]


def _abelian_types(n: int) -> list[tuple[int, ...]]:
    """All abelian isomorphism types of order n as elementary-divisor lists
    (one cyclic factor per partition part, per prime)."""

    def partitions(k: int, cap: int) -> list[tuple[int, ...]]:
        if k == 0:
            return [()]
        out = []
        for first in range(min(k, cap), 0, -1):
            out.extend((first,) + rest for rest in partitions(k - first, first))
        return out

    types: list[tuple[int, ...]] = [()]
    for p, a in factorize(n):
        new = []
        for t in types:
            for part in partitions(a, a):
                new.append(t + tuple(p**e for e in part))
        types = new
    return types if n > 1 else [(1,)]


@lru_cache(maxsize=1)
def corpus() -> list[FiniteGroup]:
    out: list[FiniteGroup] = []
    for n in range(1, 25):
        for typ in _abelian_types(n):
            g = abelian(typ)
            g.name = "x".join(f"C{d}" for d in typ) if n > 1 else "C1"
            out.append(g)
    out.extend(dihedral(n) for n in range(6, 25, 2))
    out.extend(dicyclic(n) for n in range(8, 25, 4))
    out.append(symmetric(3))
    out.append(symmetric(4))
    a4 = from_permutations(["(1 2 3)", "(2 3 4)"], name="A4")
    out.append(a4)
    out.append(semidirect_cyclic(5, 4, 2))  # Frobenius group of order 20
    out.append(semidirect_cyclic(7, 3, 2))  # Frobenius group of order 21
    out.append(semidirect_cyclic(5, 4, 4))  # C5 : C4 with order-2 action
    out.append(semidirect_cyclic(3, 8, 2))  # C3 : C8
    out.append(semidirect_cyclic(8, 2, 3))  # modular group of order 16
    out.append(semidirect_cyclic(8, 2, 5))  # order 16, a -> a^5 action
    c2 = abelian([2])
    c3 = abelian([3])
    ga = direct_product(c2, a4)
    ga.name = "C2xA4"
    out.append(ga)
    gb = direct_product(c3, dihedral(8))
    gb.name = "C3xD8"
    out.append(gb)
    gc = direct_product(c2, dihedral(10))
    gc.name = "C2xD10"
    out.append(gc)
    big = abelian([5, 5])
    big.name = "C5xC5"
    out.append(big)
    out.append(extraspecial27())
    return out


def corpus_contexts():
    """(group, p, r) combinations of the corpus with gcd(p, |G|) = 1."""
    for g in corpus():
        for p, r in PRIME_CONTEXTS:
            if g.n % p != 0:
                yield g, p, r
