"""Pure-numpy closure kernels; mirror of the compiled _speedups module.

States are encoded base-mod into int64 codes (little-endian in the
coefficient index), so the code space mod^n must fit in 62 bits.  BFS runs
level-synchronized with vectorized multiplication; the visited structure is
a boolean bitmap for small code spaces and a sorted code array otherwise.
"""

from __future__ import annotations

import numpy as np

BITMAP_LIMIT = 2**26  # bool visited array, 1 byte per code


def _powers(mod: int, n: int) -> np.ndarray:
    return np.array([mod**i for i in range(n)], dtype=np.int64)


def _decode(codes: np.ndarray, n: int, mod: int) -> np.ndarray:
    out = np.empty((codes.size, n), dtype=np.int64)
    c = codes.copy()
    for i in range(n):
        out[:, i] = c % mod
        c //= mod
    return out


def _closure(mult, start_vec: np.ndarray, gens: np.ndarray, mod: int, cap: int):
    n = start_vec.size
    space = mod**n
    if space > 2**62:
        raise ValueError(f"code space {mod}^{n} does not fit in 62 bits")
    powers = _powers(mod, n)
    use_bitmap = space <= BITMAP_LIMIT
    visited = np.zeros(space, dtype=bool) if use_bitmap else None
    visited_sorted = None
    start_code = int(start_vec @ powers)
    if use_bitmap:
        visited[start_code] = True
    else:
        visited_sorted = np.array([start_code], dtype=np.int64)
    chunks = [np.array([start_code], dtype=np.int64)]
    frontier = start_vec[None, :].astype(np.int64)
    count = 1
    while frontier.shape[0]:
        prods = [mult(frontier, g) @ powers for g in gens]
        codes = np.unique(np.concatenate(prods))
        if use_bitmap:
            new = codes[~visited[codes]]
            visited[new] = True
        else:
            new = codes[~np.isin(codes, visited_sorted)]
            visited_sorted = np.union1d(visited_sorted, new)
        count += new.size
        if count > cap:
            return None
        if new.size:
            chunks.append(new)
        frontier = _decode(new, n, mod)
    return np.sort(np.concatenate(chunks))


def closure_conv(table, mod: int, gens, cap: int):
    """BFS closure of the generated unit group inside a group ring.

    table: n x n Cayley table; gens: k x n coefficient rows.  Returns the
    sorted code array, or None once more than cap states are seen.
    """
    table = np.asarray(table, dtype=np.int64)
    n = table.shape[0]
    gens = np.asarray(gens, dtype=np.int64) % mod
    safe = n * (mod - 1) ** 2 < 2**62

    def mult(frontier, gvec):
        out = np.zeros((frontier.shape[0], n), dtype=np.int64)
        for i in range(n):
            contrib = frontier[:, i : i + 1] * gvec[None, :]
            if not safe:
                contrib %= mod
            out[:, table[i]] += contrib
            if not safe:
                out[:, table[i]] %= mod
        if safe:
            out %= mod
        return out

    start = np.zeros(n, dtype=np.int64)
    start[0] = 1
    return _closure(mult, start, gens, mod, cap)


def closure_poly(red, mod: int, gens, cap: int):
    """BFS closure inside a Galois ring; red holds the fully reduced rows of
    x^{m+i} for i = 0..m-2 (shape (m-1, m), possibly empty for m = 1)."""
    gens = np.asarray(gens, dtype=np.int64) % mod
    m = gens.shape[1]
    red = np.asarray(red, dtype=np.int64).reshape(max(m - 1, 0), m)

    def mult(frontier, gvec):
        big = np.zeros((frontier.shape[0], 2 * m - 1), dtype=np.int64)
        for i in range(m):
            big[:, i : i + m] += frontier[:, i : i + 1] * gvec[None, :]
            big %= mod
        out = big[:, :m]
        for idx in range(m, 2 * m - 1):
            out += big[:, idx : idx + 1] * red[idx - m][None, :]
            out %= mod
        return out

    start = np.zeros(m, dtype=np.int64)
    start[0] = 1
    return _closure(mult, start, gens, mod, cap)
