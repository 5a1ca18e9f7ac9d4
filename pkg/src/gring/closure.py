"""Unit-group closure engines and certification helpers.

The hot kernels (group-ring convolution BFS, Galois-ring BFS) come from the
compiled gring._speedups extension when available, with a vectorized numpy
fallback; set GRING_NO_SPEEDUPS=1 to force the fallback.

Certification is honest about scale: closures run up to a state cap
(CERT_CAP = 2^20 states by default) and anything beyond is reported as
"not certified, property-checked only".
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback

if os.environ.get("GRING_NO_SPEEDUPS"):
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _fallback

from .galois import GaloisRing, GrElem
from .groupring import GroupRing, GroupRingElem
from .modring import PrimePower, prime_factors

CERT_CAP = 2**20


def backend_name() -> str:
    return "cython" if _impl.__name__.endswith("_speedups") else "numpy"


# ---------------------------------------------------------------------------
# closures


def group_ring_closure(
    ring: GroupRing, gens: list[GroupRingElem], cap: int = CERT_CAP
):
    """Sorted code array of the subgroup generated by gens inside
    U(Z_{p^r}G), or None once more than cap states are seen."""
    table = np.asarray(ring.group.table, dtype=np.int32)
    mod = ring.base.modulus
    gvecs = np.array([g.to_vector() for g in gens], dtype=np.int64)
    return _impl.closure_conv(table, mod, gvecs, int(cap))


def galois_closure(ring: GaloisRing, gens: list[GrElem], cap: int = CERT_CAP):
    mod = ring.ctx.modulus
    m = ring.m
    red = np.asarray(ring._red, dtype=np.int64).reshape(max(m - 1, 0), m)
    gvecs = np.array([list(g.coeffs) for g in gens], dtype=np.int64)
    return _impl.closure_poly(red, mod, gvecs, int(cap))


def decode_group_ring_codes(ring: GroupRing, codes) -> list[GroupRingElem]:
    n = ring.group.n
    mod = ring.base.modulus
    mat = _fallback._decode(np.asarray(codes, dtype=np.int64), n, mod)
    return [ring.from_vector([int(v) for v in row]) for row in mat]


def decode_galois_codes(ring: GaloisRing, codes) -> list[GrElem]:
    return [ring.decode(int(c)) for c in np.asarray(codes, dtype=np.int64)]


# ---------------------------------------------------------------------------
# exhaustive unit enumeration oracle (independent of the synthesis path)


def residue_unit_table(group, p: int) -> np.ndarray:
    """Boolean table over all p^n residue codes: True iff the element of
    F_pG is invertible, decided by batched determinants of the regular
    representation over F_p."""
    n = group.n
    space = p**n
    codes = np.arange(space, dtype=np.int64)
    vecs = _fallback._decode(codes, n, p)
    mats = np.zeros((space, n, n), dtype=np.int64)
    table = group.table
    for g in range(n):
        row = table[g]
        for j in range(n):
            mats[:, row[j], j] += vecs[:, g]
    return _batched_det_nonzero(mats, p)


def _batched_det_nonzero(mats: np.ndarray, p: int) -> np.ndarray:
    """det != 0 over F_p for a batch of square matrices, by vectorized
    unit-pivot elimination."""
    a = mats % p
    nbatch, n, _ = a.shape
    alive = np.ones(nbatch, dtype=bool)
    inv = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inv[v] = pow(v, -1, p)
    for k in range(n):
        found = a[:, k, k] != 0
        for row in range(k + 1, n):
            need = alive & ~found & (a[:, row, k] != 0)
            if need.any():
                tmp = a[need][:, k, :].copy()
                a[need, k, :] = a[need, row, :]
                a[need, row, :] = tmp
                found |= need
        alive &= found
        piv_inv = inv[a[:, k, k]]
        a[:, k, :] = a[:, k, :] * piv_inv[:, None] % p
        for row in range(k + 1, n):
            f = a[:, row, k]
            a[:, row, :] = (a[:, row, :] - f[:, None] * a[:, k, :]) % p
    return alive


def unit_count(group, base: PrimePower, table: np.ndarray | None = None) -> int:
    """|U(Z_{p^r}G)| = |U(F_pG)| * p^{(r-1)|G|}; an element is a unit iff
    its mod-p reduction is (determinant criterion over the commutative
    coefficient ring)."""
    if table is None:
        table = residue_unit_table(group, base.p)
    return int(table.sum()) * base.p ** ((base.r - 1) * group.n)


def closure_equals_unit_set(ring: GroupRing, codes) -> bool:
    """Exact set equality of a closed (BFS) code set with the full unit set:
    every member reduces to an invertible residue and the cardinality
    matches |U|."""
    group, base = ring.group, ring.base
    table = residue_unit_table(group, base.p)
    codes = np.asarray(codes, dtype=np.int64)
    vecs = _fallback._decode(codes, group.n, base.modulus) % base.p
    rcodes = vecs @ _fallback._powers(base.p, group.n)
    if not bool(table[rcodes].all()):
        return False
    return codes.size == unit_count(group, base, table)


# ---------------------------------------------------------------------------
# abelian invariants from element orders


def abelian_invariants(orders) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of a finite abelian group given the
    multiset of its element orders.

    For each prime q the solution counts #{x : x^{q^j} = 1} = q^{s_j}
    determine the q-type partition: the differences (s_j - s_{j-1}) form its
    conjugate.
    """
    orders = list(orders)
    n = len(orders)
    primary: dict[int, list[int]] = {}
    for q in prime_factors(n):
        logs = [0]
        j = 1
        while True:
            c = sum(1 for o in orders if (q**j) % o == 0)
            e = 0
            while q**e < c:
                e += 1
            assert q**e == c, "solution count is not a power of q"
            logs.append(e)
            if e == logs[-2]:  # q-part exhausted
                logs.pop()
                break
            j += 1
        diffs = [logs[t] - logs[t - 1] for t in range(1, len(logs))]
        if not diffs:
            continue
        lam = [
            sum(1 for d in diffs if d >= i) for i in range(1, max(diffs) + 1)
        ]
        primary[q] = sorted(lam, reverse=True)
    if not primary:
        return []
    width = max(len(v) for v in primary.values())
    factors = []
    for i in range(width):
        d = 1
        for q, lam in primary.items():
            if i < len(lam):
                d *= q ** lam[i]
        factors.append(d)
    return sorted(factors)
