"""Command-line front door.

  gring decompose --group c5xc5 --n 36
  gring units --group c5 --p 2 --r 3 --format json
  gring galois --p 2 --r 3 --m 2
  gring verify

Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import closure, corpus, decomp, units
from .groups import (
    GroupConstructionError,
    build_group,
    from_cayley_table,
    from_permutations,
)
from .groupring import GroupRing, unit_order
from .modring import PrimePower
from .shoda import NotStronglyMonomial


def _emit(payload, fmt: str, text_lines):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _load_group(args):
    sources = [bool(args.group), bool(args.group_file), bool(args.perm_file)]
    if sum(sources) != 1:
        raise UsageError("exactly one of --group/--group-file/--perm-file required")
    try:
        if args.group:
            return build_group(args.group)
        if args.group_file:
            with open(args.group_file) as fh:
                return from_cayley_table(fh.read(), name=args.group_file)
        with open(args.perm_file) as fh:
            return from_permutations(fh.read().splitlines(), name=args.perm_file)
    except (GroupConstructionError, OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


class UsageError(Exception):
    pass


def _contexts(args, group):
    if args.n is not None:
        if args.p is not None or args.r is not None:
            raise UsageError("--n conflicts with --p/--r")
        try:
            return [(ctx.p, ctx.r) for ctx in decomp.crt_split(args.n, group)]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.p is None:
        raise UsageError("either --n or --p (with optional --r) is required")
    r = args.r if args.r is not None else 1
    if math.gcd(args.p, group.n) != 1:
        raise UsageError(f"prime {args.p} divides |G| = {group.n}")
    return [(args.p, r)]


def cmd_decompose(args) -> int:
    group = _load_group(args)
    n = args.n if args.n is not None else None
    ctxs = _contexts(args, group)
    blocks = [(PrimePower(p, r), decomp.decompose(group, p, r)) for p, r in ctxs]
    dec = decomp.Decomposition(group=group, n=n or math.prod(c.modulus for c, _ in blocks), blocks=blocks)
    report = decomp.decomposition_report(dec)
    lines = [f"Z_{dec.n} {group.name}  (order {group.n})"]
    ok = True
    for prime in report["primes"]:
        parts = []
        for row in prime["components"]:
            ring = f"Z_{prime['p']**prime['r']}"
            if row["ring"]["m"] > 1:
                ring = f"{ring}[xi_{row['ring']['m']}]"
            term = ring if row["matrix_size"] == 1 else f"M_{row['matrix_size']}({ring})"
            mult = f"{row['multiplicity']} " if row["multiplicity"] > 1 else ""
            parts.append(f"{mult}{term}")
        ok &= prime["dimension_check"]
        lines.append(
            f"  p={prime['p']} r={prime['r']}: " + " + ".join(parts)
            + ("" if prime["dimension_check"] else "  [CHECK FAILED]")
        )
    _emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_units(args) -> int:
    group = _load_group(args)
    ctxs = _contexts(args, group)
    if len(ctxs) != 1:
        raise UsageError("units needs a single prime power; use --p/--r")
    [(p, r)] = ctxs
    notes: list[str] = []
    if args.group == "c5" and p == 2:
        gens, notes = units.z2r_c5_fixture(r, group)
        comps = decomp.decompose(group, p, r)
    else:
        comps, gens = units.unit_group_generators(group, p, r)
    records = []
    for gen in gens:
        order = gen.declared_order
        if order is None and group.n * math.log2(p**r) <= 24:
            order = unit_order(gen.element)
        records.append(
            {
                "component": gen.component,
                "kind": gen.kind,
                "order": order,
                "element": gen.element.render(),
            }
        )
    payload = {
        "group": group.name,
        "p": p,
        "r": r,
        "generators": records,
        "notes": notes,
    }
    lines = [f"U(Z_{p**r} {group.name}): {len(records)} generators"]
    for rec in records:
        comp = "" if rec["component"] is None else f" comp={rec['component']}"
        order = "?" if rec["order"] is None else rec["order"]
        lines.append(f"  [{rec['kind']}{comp}] order {order}: {rec['element']}")
    lines.extend(f"  note: {n}" for n in notes)
    ok = all(gen.verify() for gen in gens)
    if args.certify_closure:
        ring = GroupRing(group, PrimePower(p, r))
        expected = units.expected_unit_group_order(comps)
        cert = units.certify_closure(ring, gens, expected)
        payload["closure"] = {k: v for k, v in cert.items() if k != "cap"}
        lines.append(f"  closure: {cert['status']} (expected order {expected})")
        ok &= cert["certified"] or "above cap" in cert["status"]
    _emit(payload, args.format, lines)
    return 0 if ok else 1


def cmd_galois(args) -> int:
    from .galois import canonical_ring

    try:
        ring = canonical_ring(args.p, args.r, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    gens = ring.unit_group_generators()
    codes = closure.galois_closure(ring, gens, cap=closure.CERT_CAP)
    payload = {
        "p": args.p,
        "r": args.r,
        "m": args.m,
        "modulus": [int(c) for c in ring.h.coeffs],
        "size": ring.size,
        "unit_count": ring.unit_count,
        "unit_generators": [repr(g) for g in gens],
        "closure_order": None if codes is None else int(codes.size),
    }
    lines = [
        f"GR({args.p}^{args.r}, {args.m}) = Z_{args.p**args.r}[x]/({ring.h})",
        f"  size {ring.size}, units {ring.unit_count}",
        "  unit generators: " + ", ".join(repr(g) for g in gens),
    ]
    ok = True
    if codes is not None:
        ok = codes.size == ring.unit_count
        lines.append(f"  closure order {codes.size} ({'ok' if ok else 'MISMATCH'})")
    else:
        lines.append(f"  closure not certified (above cap {closure.CERT_CAP})")
    _emit(payload, args.format, lines)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    results = []

    def check(name, ok, detail=""):
        results.append({"check": name, "ok": bool(ok), "detail": detail})
        print(f"  {'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))

    print("verify: decomposition suite over the built-in corpus")
    galois_seen = set()
    for g, p, r in corpus.corpus_contexts():
        try:
            comps = decomp.decompose(g, p, r)
        except NotStronglyMonomial as exc:
            check(f"decompose {g.name} p={p} r={r}", False, str(exc))
            continue
        report = decomp.verify_components(g, PrimePower(p, r), comps)
        bad = [name for name, ok, _ in report if not ok]
        check(
            f"{g.name} p={p} r={r}: {len(comps)} components",
            not bad,
            ",".join(bad),
        )
        for c in comps:
            key = (p, r, c.ring_degree)
            if key not in galois_seen and (p**r) ** c.ring_degree <= 2**16:
                galois_seen.add(key)
    print("verify: Galois-ring unit closures (|R| <= 2^16)")
    for p, r, m in sorted(galois_seen):
        from .galois import canonical_ring

        ring = canonical_ring(p, r, m)
        codes = closure.galois_closure(ring, ring.unit_group_generators())
        ok = codes is not None and codes.size == ring.unit_count
        check(f"U(GR({p}^{r},{m})) = {ring.unit_count}", ok)
    payload = {"results": results, "ok": all(x["ok"] for x in results)}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    return 0 if payload["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gring",
        description="Decompose modular group rings Z_nG and generate their unit groups",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(sp, group=True):
        if group:
            sp.add_argument("--group", help="registry name (c5, c5xc5, s4, d8, q8, es27, ...)")
            sp.add_argument("--group-file", help="Cayley-table file")
            sp.add_argument("--perm-file", help="permutation-generator file (cycle notation)")
            sp.add_argument("--n", type=int, help="composite modulus (CRT split)")
            sp.add_argument("--p", type=int, help="prime modulus base")
            sp.add_argument("--r", type=int, help="prime power exponent (default 1)")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--seed", type=int, default=0,
                        help="reserved; all algorithms are deterministic")

    d = sub.add_parser("decompose", help="matrix-ring decomposition of Z_nG")
    add_common(d)
    d.set_defaults(func=cmd_decompose)

    u = sub.add_parser("units", help="unit-group generator synthesis")
    add_common(u)
    u.add_argument("--certify-closure", action="store_true",
                   help="BFS-certify the generated set (within the state cap)")
    u.set_defaults(func=cmd_units)

    ga = sub.add_parser("galois", help="Galois ring data and unit generators")
    ga.add_argument("--p", type=int, required=True)
    ga.add_argument("--r", type=int, required=True)
    ga.add_argument("--m", type=int, required=True)
    add_common(ga, group=False)
    ga.set_defaults(func=cmd_galois)

    v = sub.add_parser("verify", help="run the invariant suite over the corpus")
    add_common(v, group=False)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotStronglyMonomial as exc:
        print(f"not strongly monomial: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
