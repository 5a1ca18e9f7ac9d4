"""Gaussian elimination over local rings (Z_{p^r}, Galois rings).

Pivoting is restricted to unit entries: over a chain ring a square system is
uniquely solvable exactly when elimination finds a unit pivot in every
column, and a spanning-set certificate is a full count of unit pivots.
Element types are abstracted through a tiny ops adapter.
"""

from __future__ import annotations

from .modring import NotAUnit, PrimePower


class SingularSystem(ValueError):
    """No unit pivot available: the system is singular over the local ring."""


class ZModOps:
    """Adapter for plain-int matrices over Z_{p^r}."""

    def __init__(self, ctx: PrimePower):
        self.ctx = ctx
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.ctx.modulus

    def sub(self, a, b):
        return (a - b) % self.ctx.modulus

    def mul(self, a, b):
        return (a * b) % self.ctx.modulus

    def is_unit(self, a):
        return self.ctx.is_unit(a)

    def inv(self, a):
        return self.ctx.inv(a)

    def is_zero(self, a):
        return a % self.ctx.modulus == 0


class ElemOps:
    """Adapter for element objects with operators and is_unit/inverse."""

    def __init__(self, zero, one):
        self.zero = zero
        self.one = one

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a.is_unit

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a):
        return not bool(a)


def _echelonize(rows, ncols, ops):
    """In-place unit-pivot forward elimination. Returns pivot list
    [(row, col), ...]; rows are swapped so pivot i sits in row i."""
    pivots = []
    prow = 0
    for col in range(ncols):
        pr = None
        for i in range(prow, len(rows)):
            if ops.is_unit(rows[i][col]):
                pr = i
                break
        if pr is None:
            continue
        rows[prow], rows[pr] = rows[pr], rows[prow]
        inv = ops.inv(rows[prow][col])
        rows[prow] = [ops.mul(inv, v) for v in rows[prow]]
        for i in range(len(rows)):
            if i == prow:
                continue
            f = rows[i][col]
            if ops.is_zero(f):
                continue
            rows[i] = [
                ops.sub(v, ops.mul(f, w)) for v, w in zip(rows[i], rows[prow])
            ]
        pivots.append((prow, col))
        prow += 1
    return pivots


def unit_pivot_rank(matrix, ops) -> int:
    """Number of unit pivots = rank of the reduction mod p.

    Equals ncols iff the columns span a free direct summand of full rank,
    i.e. iff they are a basis certificate over the chain ring.
    """
    if not matrix:
        return 0
    rows = [list(r) for r in matrix]
    return len(_echelonize(rows, len(rows[0]), ops))


def det_is_unit(matrix, ops) -> bool:
    """Whether det of a square matrix is a unit of the local ring."""
    n = len(matrix)
    if n == 0:
        return True
    return unit_pivot_rank(matrix, ops) == n


def solve(matrix, rhs, ops):
    """Solve A x = b where A is m x n with columns independent mod p (m >= n).

    rhs may be a single column (list of length m) or a list of columns
    (m x k).  Raises SingularSystem if no unit pivot exists for some column,
    ValueError if the system is inconsistent.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    single = rhs and not isinstance(rhs[0], list)
    cols = [list(rhs)] if single else [list(c) for c in rhs]
    rows = [list(matrix[i]) + [c[i] for c in cols] for i in range(m)]
    pivots = _echelonize(rows, n, ops)
    if len(pivots) < n:
        raise SingularSystem(f"only {len(pivots)} unit pivots for {n} columns")
    for i in range(n, m):
        for j in range(n, n + len(cols)):
            if not ops.is_zero(rows[i][j]):
                raise ValueError("inconsistent linear system")
    col_of = {pc: pr for pr, pc in pivots}
    xs = []
    for k in range(len(cols)):
        xs.append([rows[col_of[j]][n + k] for j in range(n)])
    return xs[0] if single else xs


def invert(matrix, ops):
    """Inverse of a square matrix over the local ring."""
    n = len(matrix)
    eye = [[ops.one if i == j else ops.zero for i in range(n)] for j in range(n)]
    try:
        cols = solve(matrix, eye, ops)
    except SingularSystem as exc:
        raise NotAUnit(f"matrix is not invertible: {exc}") from exc
    # solve returns columns of the inverse
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def mat_mul(a, b, ops):
    n, k, m = len(a), len(b), len(b[0])
    out = [[ops.zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            f = a[i][t]
            if ops.is_zero(f):
                continue
            for j in range(m):
                out[i][j] = ops.add(out[i][j], ops.mul(f, b[t][j]))
    return out
