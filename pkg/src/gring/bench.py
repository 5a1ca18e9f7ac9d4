"""Benchmark the compiled closure kernels against the numpy fallback.

    python -m gring.bench

Workloads are the closure-heavy paths that dominate the verification suite:
unit-group BFS in group rings and Galois rings of increasing size.
"""

from __future__ import annotations

import time

import numpy as np

from . import _fallback
from .galois import canonical_ring
from .groups import abelian, cyclic
from .units import unit_group_generators, z2r_c5_fixture

try:
    from . import _speedups
except ImportError:
    _speedups = None


def _workloads():
    c5 = cyclic(5)
    gens, _ = z2r_c5_fixture(3, c5)
    yield (
        "U(Z_8 C5) via the seven closed-form generators (15360 states)",
        np.asarray(c5.table, dtype=np.int32),
        8,
        np.array([g.element.to_vector() for g in gens], dtype=np.int64),
        "conv",
    )
    c9 = cyclic(9)
    _, gens9 = unit_group_generators(c9, 2, 2)
    yield (
        "U(Z_4 C9) via synthesized generators (96768 states)",
        np.asarray(c9.table, dtype=np.int32),
        4,
        np.array([g.element.to_vector() for g in gens9], dtype=np.int64),
        "conv",
    )
    g33 = abelian([3, 3])
    _, gens33 = unit_group_generators(g33, 2, 2)
    yield (
        "U(Z_4 C3xC3) via synthesized generators (41472 states)",
        np.asarray(g33.table, dtype=np.int32),
        4,
        np.array([g.element.to_vector() for g in gens33], dtype=np.int64),
        "conv",
    )
    ring = canonical_ring(3, 2, 5)
    yield (
        "U(GR(9, deg 5)) unit closure (58806 states)",
        np.asarray(ring._red, dtype=np.int64).reshape(4, 5),
        9,
        np.array([list(g.coeffs) for g in ring.unit_group_generators()], dtype=np.int64),
        "poly",
    )


def _run(impl, kind, aux, mod, gens, cap=2**21):
    fn = impl.closure_conv if kind == "conv" else impl.closure_poly
    t0 = time.perf_counter()
    codes = fn(aux, mod, gens, cap)
    return time.perf_counter() - t0, codes


def main():
    print(f"backends: numpy fallback{' + cython' if _speedups else ' only'}")
    for label, aux, mod, gens, kind in _workloads():
        t_np, codes_np = _run(_fallback, kind, aux, mod, gens)
        line = f"{label}\n  numpy   {t_np * 1000:9.1f} ms  ({codes_np.size} states)"
        if _speedups is not None:
            t_cy, codes_cy = _run(_speedups, kind, aux, mod, gens)
            assert np.array_equal(codes_np, codes_cy), "backend mismatch"
            line += f"\n  cython  {t_cy * 1000:9.1f} ms  (x{t_np / t_cy:.1f})"
        print(line)


if __name__ == "__main__":
    main()
