# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled closure kernels (see gring._fallback for the reference
semantics).  States are base-mod encoded into int64 codes; visited is a
bit-packed bitmap for code spaces up to 2^30, a Python set beyond."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF MAXDIM = 256

BITMAP_BITS = 2**30


def closure_conv(table, long long mod, gens, long long cap):
    """BFS closure of <gens> inside the group ring; returns sorted int64
    codes or None once more than cap states are seen."""
    t_arr = np.ascontiguousarray(table, dtype=np.int32)
    g_arr = np.ascontiguousarray(np.asarray(gens, dtype=np.int64) % mod)
    cdef cnp.int32_t[:, ::1] t = t_arr
    cdef cnp.int64_t[:, ::1] gv = g_arr
    cdef int n = t.shape[0]
    cdef int k = gv.shape[0]
    if n > MAXDIM:
        raise ValueError("group order exceeds kernel buffer")
    space = int(mod) ** n
    if space > 2**62:
        raise ValueError("code space does not fit in 62 bits")

    cdef cnp.int64_t[::1] queue = np.empty(cap + 2, dtype=np.int64)
    cdef long long head = 0, tail = 0
    cdef long long code, c2, a, b
    cdef int i, j, gi
    cdef long long buf[MAXDIM]
    cdef long long buf2[MAXDIM]

    cdef bint use_bitmap = space <= BITMAP_BITS
    cdef cnp.uint8_t[::1] bitmap = None
    visited_set = None
    if use_bitmap:
        bitmap = np.zeros((space + 7) // 8, dtype=np.uint8)
    else:
        visited_set = set()

    queue[tail] = 1  # identity: coefficient 1 at index 0
    tail += 1
    if use_bitmap:
        bitmap[0] |= 2  # bit for code 1
    else:
        visited_set.add(1)

    while head < tail:
        code = queue[head]
        head += 1
        for i in range(n):
            buf[i] = code % mod
            code //= mod
        for gi in range(k):
            for i in range(n):
                buf2[i] = 0
            for i in range(n):
                a = buf[i]
                if a == 0:
                    continue
                for j in range(n):
                    b = gv[gi, j]
                    if b != 0:
                        buf2[t[i, j]] = (buf2[t[i, j]] + a * b) % mod
            c2 = 0
            for i in range(n - 1, -1, -1):
                c2 = c2 * mod + buf2[i]
            if use_bitmap:
                if bitmap[c2 >> 3] & (1 << (c2 & 7)):
                    continue
                bitmap[c2 >> 3] |= 1 << (c2 & 7)
            else:
                if c2 in visited_set:
                    continue
                visited_set.add(c2)
            if tail > cap:
                return None
            queue[tail] = c2
            tail += 1
    return np.sort(np.asarray(queue[:tail]))


def closure_poly(red, long long mod, gens, long long cap):
    """BFS closure inside a Galois ring presented by the reduced rows of
    x^{m+i}; same contract as closure_conv."""
    g_arr = np.ascontiguousarray(np.asarray(gens, dtype=np.int64) % mod)
    cdef cnp.int64_t[:, ::1] gv = g_arr
    cdef int m = gv.shape[1]
    cdef int k = gv.shape[0]
    r_arr = np.ascontiguousarray(np.asarray(red, dtype=np.int64).reshape(max(m - 1, 0), m))
    cdef cnp.int64_t[:, ::1] rd = r_arr
    if m > MAXDIM // 2:
        raise ValueError("extension degree exceeds kernel buffer")
    space = int(mod) ** m
    if space > 2**62:
        raise ValueError("code space does not fit in 62 bits")

    cdef cnp.int64_t[::1] queue = np.empty(cap + 2, dtype=np.int64)
    cdef long long head = 0, tail = 0
    cdef long long code, c2, a, b, c
    cdef int i, j, gi, idx
    cdef long long buf[MAXDIM]
    cdef long long prod[MAXDIM]

    cdef bint use_bitmap = space <= BITMAP_BITS
    cdef cnp.uint8_t[::1] bitmap = None
    visited_set = None
    if use_bitmap:
        bitmap = np.zeros((space + 7) // 8, dtype=np.uint8)
    else:
        visited_set = set()

    queue[tail] = 1
    tail += 1
    if use_bitmap:
        bitmap[0] |= 2
    else:
        visited_set.add(1)

    while head < tail:
        code = queue[head]
        head += 1
        for i in range(m):
            buf[i] = code % mod
            code //= mod
        for gi in range(k):
            for i in range(2 * m - 1):
                prod[i] = 0
            for i in range(m):
                a = buf[i]
                if a == 0:
                    continue
                for j in range(m):
                    b = gv[gi, j]
                    if b != 0:
                        prod[i + j] = (prod[i + j] + a * b) % mod
            for idx in range(2 * m - 2, m - 1, -1):
                c = prod[idx]
                if c == 0:
                    continue
                for i in range(m):
                    prod[i] = (prod[i] + c * rd[idx - m, i]) % mod
            c2 = 0
            for i in range(m - 1, -1, -1):
                c2 = c2 * mod + prod[i]
            if use_bitmap:
                if bitmap[c2 >> 3] & (1 << (c2 & 7)):
                    continue
                bitmap[c2 >> 3] |= 1 << (c2 & 7)
            else:
                if c2 in visited_set:
                    continue
                visited_set.add(c2)
            if tail > cap:
                return None
            queue[tail] = c2
            tail += 1
    return np.sort(np.asarray(queue[:tail]))
