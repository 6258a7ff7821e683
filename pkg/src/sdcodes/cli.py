"""Command-line interface.

One executable with subcommands for constructing, verifying, measuring,
extending, neighboring and searching.  Exit codes: 0 success, 1 usage or
parse error, 2 failed construction precondition, 3 measurement anomaly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone

from . import bincode, constructions, enumerators, extend_neighbor, search
from .errors import (
    BudgetExceeded,
    CodesError,
    NotSelfDualCondition,
    UnknownEnumerator,
)
from .rings import RingId, decode_symbol, parse_vector

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_MEASUREMENT = 3


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("SDCODES_THREADS")
    return max(1, int(env)) if env else 1


def _emit(args, payload: dict, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _load_any(path: str):
    """Generator file -> (ring generator | None, binary code)."""
    with open(path) as fh:
        head = fh.readline()
        fh.seek(0)
        if head.startswith("ring"):
            gen = constructions.read_ring_generator(fh)
            return gen, bincode.from_ring_generator(gen)
        return None, bincode.read_binary_generator(fh)


def _load_ring_generator(path: str):
    with open(path) as fh:
        return constructions.read_ring_generator(fh)


def _write_generator(path: str, gen=None, code=None) -> None:
    with open(path, "w") as fh:
        if gen is not None:
            constructions.write_ring_generator(fh, gen)
        else:
            bincode.write_binary_generator(fh, code)


def _rc_effective(args) -> str | None:
    if args.rc is not None and args.rc_convention == "back":
        ring = RingId.parse(args.ring)
        v = parse_vector(args.rc, ring)
        from .rings import encode_vector

        return encode_vector(v[1:] + v[:1])
    return args.rc


def cmd_construct(args) -> int:
    ring = RingId.parse(args.ring)
    gen = constructions.build_from_rows(
        ring, args.n, args.method, args.ra, args.rb, _rc_effective(args), args.lam,
        force=args.force,
    )
    ring_sd = constructions.is_self_dual_generator(gen)
    if args.out:
        _write_generator(args.out, gen=gen)
    if args.force and not ring_sd:
        _emit(
            args,
            {"k": gen.k, "m": gen.m, "ring_self_dual": False, "ring": ring.value,
             "out": args.out},
            f"forced [{gen.k}x{gen.m}] generator over {ring.value}: G*G^T != 0"
            + (f", written to {args.out}" if args.out else ""),
        )
        return EXIT_OK
    code = bincode.from_ring_generator(gen)
    sd = bincode.is_self_dual(code)
    _emit(
        args,
        {"n": code.n, "k": code.k, "self_dual": sd, "ring": ring.value, "out": args.out},
        f"[{code.n},{code.k}] binary image, self-dual: {sd}"
        + (f", written to {args.out}" if args.out else ""),
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    gen, code = _load_any(args.infile)
    ring_ok = constructions.is_self_dual_generator(gen) if gen is not None else None
    sd = bincode.is_self_dual(code)
    payload = {"n": code.n, "k": code.k, "self_dual": sd}
    human = f"[{code.n},{code.k}] self-dual: {sd}"
    if ring_ok is not None:
        payload["ring_self_dual"] = ring_ok
        human += f" (ring generator G*G^T = 0: {ring_ok})"
    _emit(args, payload, human)
    return EXIT_OK if sd and ring_ok in (None, True) else EXIT_PRECONDITION


def cmd_mindist(args) -> int:
    _, code = _load_any(args.infile)
    d = bincode.min_distance(code, threads=_threads(args))
    _emit(args, {"n": code.n, "k": code.k, "d": d}, f"[{code.n},{code.k},{d}]")
    return EXIT_OK


def cmd_wenum(args) -> int:
    _, code = _load_any(args.infile)
    dist = bincode.weight_distribution(code, force=args.force, threads=_threads(args))
    d = dist.min_distance()
    payload = {
        "n": code.n,
        "k": code.k,
        "d": d,
        "weight_distribution": [list(p) for p in dist.nonzero_pairs()],
    }
    try:
        params = enumerators.extract_params(code.n, dist, d)
    except UnknownEnumerator as exc:
        payload["family"] = None
        payload["error"] = str(exc)
        _emit(args, payload, f"[{code.n},{code.k},{d}] no enumerator family: {exc}\n"
              + " ".join(f"A_{i}={a}" for i, a in dist.nonzero_pairs()[:8]))
        return EXIT_MEASUREMENT
    payload.update(
        {"family": params.family, "beta": params.beta, "gamma": params.gamma,
         "status": enumerators.classify_params(params)}
    )
    _emit(args, payload, f"[{code.n},{code.k},{d}] {params}")
    return EXIT_OK


def cmd_extend(args) -> int:
    gen = _load_ring_generator(args.infile)
    c = decode_symbol(args.c, gen.ring)
    x = parse_vector(args.x, gen.ring)
    ext = extend_neighbor.extend(gen, extend_neighbor.ExtensionSpec(c, x))
    if args.out:
        _write_generator(args.out, gen=ext)
    code = bincode.from_ring_generator(ext)
    _emit(
        args,
        {"n": code.n, "k": code.k, "self_dual": bincode.is_self_dual(code), "out": args.out},
        f"extended to [{code.n},{code.k}] binary image"
        + (f", written to {args.out}" if args.out else ""),
    )
    return EXIT_OK


def cmd_neighbor(args) -> int:
    _, code = _load_any(args.infile)
    base = bincode.standard_form(code)
    if args.suffix:
        seed = extend_neighbor.suffix_seed(base.n, [int(b) for b in args.suffix])
    else:
        seed = bincode.bits_to_int([int(b) for b in args.x])
    nb = extend_neighbor.neighbor(base, seed)
    if args.out:
        _write_generator(args.out, code=nb)
    _emit(
        args,
        {"n": nb.n, "k": nb.k, "self_dual": bincode.is_self_dual(nb), "out": args.out},
        f"neighbor [{nb.n},{nb.k}], self-dual: {bincode.is_self_dual(nb)}"
        + (f", written to {args.out}" if args.out else ""),
    )
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = search.SearchConfig.from_toml(args.config)
    stats = search.SearchStats()
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for record in search.run_search(cfg, stats=stats, threads=_threads(args)):
            if args.timestamps:
                record = search.ResultRecord(
                    **{**record.__dict__, "timestamp": datetime.now(timezone.utc).isoformat()}
                )
            out.write(record.to_json() + "\n")
    finally:
        if args.out:
            out.close()
    print(
        f"trials={stats.trials} emitted={stats.emitted} deduped={stats.deduped} "
        f"skipped_precondition={stats.skipped_precondition} skipped_distance={stats.skipped_distance}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_registry(args) -> int:
    entries = enumerators.registry_entries()
    ranges = enumerators.registry_ranges()
    if args.json:
        print(json.dumps({"entries": entries, "unresolved_ranges": ranges}, sort_keys=True))
    else:
        for e in entries:
            g = f" gamma={e['gamma']}" if e.get("gamma") is not None else ""
            print(f"[{e['length']}] {e['family']} beta={e['beta']}{g}  {e['status']}")
        for r in ranges:
            print(
                f"[{r['length']}] {r['family']} beta in [{r['beta_min']},{r['beta_max']}] "
                f"gamma={r['gamma']}  {r['status']}"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdcodes", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, infile=True):
        if infile:
            sp.add_argument("--in", dest="infile", required=True, help="generator file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--threads", type=int, default=None, help="worker threads")

    c = sub.add_parser("construct", help="build a generator from first rows")
    c.add_argument("--ring", required=True, choices=["f2", "f2u", "f4u"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", required=True, choices=list(constructions.METHODS))
    c.add_argument("--ra", help="first row of A")
    c.add_argument("--rb", help="first row of B")
    c.add_argument("--rc", help="first row of C")
    c.add_argument("--lambda", dest="lam", help="unit for lambda-circulant kinds")
    c.add_argument(
        "--rc-convention",
        choices=["row", "back"],
        default="row",
        help="'back' reads --rc as the back-circulant listing used by the"
        " symmetric-variant tables (rotate left by one)",
    )
    c.add_argument(
        "--force",
        action="store_true",
        help="assemble even when the self-duality condition fails (G*G^T is"
        " still checked and reported)",
    )
    c.add_argument("--out", help="write the ring generator here")
    add_common(c, infile=False)
    c.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="check self-duality of a generator file")
    add_common(v)
    v.set_defaults(fn=cmd_verify)

    m = sub.add_parser("mindist", help="minimum distance by full enumeration")
    add_common(m)
    m.set_defaults(fn=cmd_mindist)

    w = sub.add_parser("wenum", help="weight distribution and enumerator parameters")
    add_common(w)
    w.add_argument("--force", action="store_true", help="override the k <= 34 budget")
    w.set_defaults(fn=cmd_wenum)

    e = sub.add_parser("extend", help="length n -> n+2 ring extension")
    add_common(e)
    e.add_argument("--c", required=True, help="unit with c^2 = 1")
    e.add_argument("--x", required=True, help="extension vector X")
    e.add_argument("--out", help="write the extended ring generator here")
    e.set_defaults(fn=cmd_extend)

    nb = sub.add_parser("neighbor", help="self-dual neighbor through a seed vector")
    add_common(nb)
    g = nb.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", help="full-length seed bits")
    g.add_argument("--suffix", help="seed tail; leading half is zero-filled")
    nb.add_argument("--out", help="write the neighbor generator here")
    nb.set_defaults(fn=cmd_neighbor)

    s = sub.add_parser("search", help="seeded search from a TOML config")
    s.add_argument("--config", required=True, help="TOML search configuration")
    s.add_argument("--out", help="JSONL output path (default stdout)")
    s.add_argument("--timestamps", action="store_true", help="stamp records (breaks replay identity)")
    s.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    s.add_argument("--threads", type=int, default=None)
    s.set_defaults(fn=cmd_search)

    r = sub.add_parser("registry", help="known weight-enumerator parameter sets")
    r.add_argument("--json", action="store_true")
    r.set_defaults(fn=cmd_registry)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (NotSelfDualCondition,) as exc:
        print(f"construction precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (BudgetExceeded, UnknownEnumerator) as exc:
        print(f"measurement: {exc}", file=sys.stderr)
        return EXIT_MEASUREMENT
    except (CodesError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
