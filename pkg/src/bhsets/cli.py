"""Command-line interface.

Subcommands mirror the library surface: construct, classify, scan, greedy,
exact, bounds.  Every subcommand takes --format {pretty,json,csv}; scan
emits one row per target size k with CSV columns (k, bound, q) so a table
diff is a one-liner.  Exit codes: 0 success, 2 invalid parameters or
construction errors, 3 verification failure (a constructed set failing its
own B_h check, which signals an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bounds as bounds_mod
from .bh import is_bh_cyclic, is_bh_integer
from .classify import certify_inequivalence, classify
from .construct import construct
from .errors import BhSetsError
from .primes import as_prime_power
from .search import brute_force_optimal, greedy_bh, table_scan

ENV_CONWAY_DB = "BHSETS_CONWAY_DB"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VERIFICATION = 3

#: Desk-scale envelope; beyond it, runs require --expensive.
MAX_DEFAULT_Q = 13
MAX_DEFAULT_EXACT_K = 7


@dataclass(frozen=True)
class RunConfig:
    format: str
    conway_db: str | None
    jobs: int
    expensive: bool


def _common_flags(sp):
    sp.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    sp.add_argument(
        "--conway-db",
        default=None,
        help=f"path to a polynomial database file (default: bundled copy, or ${ENV_CONWAY_DB})",
    )
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    sp.add_argument(
        "--expensive",
        action="store_true",
        help="allow runs outside the desk-scale envelope",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bhsets", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="build one set and verify it")
    sp.add_argument("--family", choices=("bose", "singer"), required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    _common_flags(sp)

    sp = sub.add_parser("classify", help="partition b values into equivalence classes")
    sp.add_argument("--family", choices=("bose", "singer"), required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--mode", choices=("fast", "full"), default="fast")
    sp.add_argument(
        "--no-certify",
        action="store_true",
        help="skip the pairwise direct check of class representatives",
    )
    _common_flags(sp)

    sp = sub.add_parser("scan", help="best spans over all affine images and subsets")
    sp.add_argument("--family", choices=("bose", "singer"), required=True)
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--q-max", type=int, required=True)
    sp.add_argument("--q-min", type=int, default=2)
    sp.add_argument("--k", type=int, required=True, help="largest target size")
    sp.add_argument("--mode", choices=("fast", "full"), default="fast")
    sp.add_argument("--checkpoint", default=None, help="resumable progress file")
    _common_flags(sp)

    sp = sub.add_parser("greedy", help="greedy B_h sequence")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--start", type=int, choices=(0, 1), default=1)
    _common_flags(sp)

    sp = sub.add_parser("exact", help="exhaustive minimum-span search")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None, help="span cap; error if exceeded")
    sp.add_argument("--include-reflections", action="store_true")
    _common_flags(sp)

    sp = sub.add_parser("bounds", help="evaluate span/size bounds")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument(
        "--regime",
        choices=("constructive", "unconditional", "large-k", "bhp", "rh"),
        default="constructive",
    )
    _common_flags(sp)

    return ap


def _config(args) -> RunConfig:
    db = args.conway_db or os.environ.get(ENV_CONWAY_DB) or None
    if args.jobs < 1:
        raise ValueError("--jobs must be >= 1")
    return RunConfig(args.format, db, args.jobs, args.expensive)


def _set_to_str(elems) -> str:
    return "{" + ",".join(str(e) for e in elems) + "}"


def cmd_construct(args, cfg: RunConfig) -> int:
    cset = construct(args.family, args.h, args.q, args.b, conway_db=cfg.conway_db)
    check = is_bh_cyclic(cset, args.h)
    payload = {
        "family": args.family,
        "h": args.h,
        "q": args.q,
        "b": cset.meta.b,
        "modulus": cset.modulus,
        "elements": list(cset.one_based()),
        "verified_bh": bool(check),
    }
    if cfg.format == "json":
        print(json.dumps(payload))
    elif cfg.format == "csv":
        print("family,h,q,b,modulus,verified,elements")
        print(
            f"{args.family},{args.h},{args.q},{cset.meta.b},{cset.modulus},"
            f"{int(bool(check))},{' '.join(map(str, cset.one_based()))}"
        )
    else:
        status = f"verified B_{args.h}" if check else f"FAILED B_{args.h} check"
        print(
            f"{args.family} h={args.h} q={args.q} b={cset.meta.b}: "
            f"{_set_to_str(cset.one_based())} mod {cset.modulus}  [{status}]"
        )
    if not check:
        print(f"error: constructed set is not B_{args.h}: {check.collision}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_classify(args, cfg: RunConfig) -> int:
    cls = classify(args.family, args.h, args.q, args.mode, conway_db=cfg.conway_db)
    certified = None
    if not args.no_certify:
        report = certify_inequivalence(cls, conway_db=cfg.conway_db)
        cls = report.classification
        certified = report.all_inequivalent
    payload = {
        "family": args.family,
        "h": args.h,
        "q": args.q,
        "mode": args.mode,
        "stages": list(cls.stages),
        "counts_after_stage": list(cls.counts_after_stage),
        "representatives": list(cls.representatives),
        "n_classes": cls.n_classes(),
        "pairwise_inequivalent": certified,
    }
    if cfg.format == "json":
        print(json.dumps(payload))
    elif cfg.format == "csv":
        print("stage,classes")
        for stage, count in zip(cls.stages, cls.counts_after_stage):
            print(f"{stage},{count}")
        print(f"representatives,{' '.join(map(str, cls.representatives))}")
    else:
        print(f"{args.family} h={args.h} q={args.q} mode={args.mode}")
        funnel = " -> ".join(
            f"{c} ({s})" for s, c in zip(cls.stages, cls.counts_after_stage)
        )
        print(f"  funnel: {funnel}")
        print(f"  representatives: {' '.join(map(str, cls.representatives))}")
        if certified is not None:
            verdict = (
                "pairwise inequivalent (direct check)"
                if certified
                else "DIRECT CHECK MERGED CLASSES"
            )
            print(f"  {verdict}")
    return EXIT_OK


def _prime_powers_in(lo, hi):
    return [q for q in range(max(lo, 2), hi + 1) if as_prime_power(q) is not None]


def cmd_scan(args, cfg: RunConfig) -> int:
    if args.q_max > MAX_DEFAULT_Q and not cfg.expensive:
        raise ValueError(
            f"--q-max {args.q_max} exceeds the desk-scale envelope ({MAX_DEFAULT_Q}); pass --expensive"
        )
    qs = _prime_powers_in(args.q_min, args.q_max)
    if not qs:
        raise ValueError(f"no prime powers in [{args.q_min}, {args.q_max}]")
    results = table_scan(
        args.h,
        args.family,
        qs,
        args.k,
        mode=args.mode,
        conway_db=cfg.conway_db,
        jobs=cfg.jobs,
        checkpoint=args.checkpoint,
    )
    if cfg.format == "csv":
        print("k,bound,q")
        for k in sorted(results):
            r = results[k]
            print(f"{k},{r.n},{r.provenance['q']}")
    elif cfg.format == "json":
        for k in sorted(results):
            r = results[k]
            print(
                json.dumps(
                    {
                        "k": k,
                        "n": r.n,
                        "q": r.provenance["q"],
                        "b": r.provenance["b"],
                        "d": r.provenance["d"],
                        "family": args.family,
                        "h": args.h,
                        "witness": list(r.witness),
                    }
                )
            )
    else:
        for k in sorted(results):
            r = results[k]
            print(
                f"k={k:3d}  n={r.n:6d}  q={r.provenance['q']:3d} b={r.provenance['b']} "
                f"d={r.provenance['d']}  witness={_set_to_str(r.witness)}"
            )
    return EXIT_OK


def cmd_greedy(args, cfg: RunConfig) -> int:
    terms = greedy_bh(args.h, args.count, start=args.start)
    if cfg.format == "json":
        print(json.dumps({"h": args.h, "start": args.start, "terms": list(terms)}))
    elif cfg.format == "csv":
        print("k,term")
        for i, t in enumerate(terms, 1):
            print(f"{i},{t}")
    else:
        print(",".join(map(str, terms)))
    return EXIT_OK


def cmd_exact(args, cfg: RunConfig) -> int:
    if args.k > MAX_DEFAULT_EXACT_K and not cfg.expensive:
        raise ValueError(
            f"exhaustive search at k={args.k} exceeds the desk-scale envelope "
            f"(k <= {MAX_DEFAULT_EXACT_K}); pass --expensive"
        )
    res = brute_force_optimal(
        args.h, args.k, args.cap, include_reflections=args.include_reflections
    )
    for w in res.witnesses:
        assert is_bh_integer(w, args.h)
    if cfg.format == "json":
        print(
            json.dumps(
                {"h": args.h, "k": args.k, "n": res.n, "witnesses": [list(w) for w in res.witnesses]}
            )
        )
    elif cfg.format == "csv":
        print("h,k,n,witness")
        for w in res.witnesses:
            print(f"{args.h},{args.k},{res.n},{' '.join(map(str, w))}")
    else:
        wlist = " ".join(_set_to_str(w) for w in res.witnesses)
        print(f"h={args.h} k={args.k}: minimal span n={res.n}; witnesses: {wlist}")
    return EXIT_OK


def cmd_bounds(args, cfg: RunConfig) -> int:
    reports = []
    if args.regime == "constructive":
        if args.k is None:
            raise ValueError("--regime constructive requires --k")
        reports.append(bounds_mod.constructive_bound(args.h, args.k))
    else:
        k = args.k if args.k is not None else 4
        n = args.n if args.n is not None else args.h + 3
        if args.regime == "unconditional":
            up, low = bounds_mod.unconditional_bounds(args.h, k, n)
        else:
            up, low = bounds_mod.conditional_bounds(args.h, k, n, args.regime)
        if args.k is not None:
            reports.append(up)
        if args.n is not None:
            reports.append(low)
        if not reports:
            raise ValueError("pass --k (min-span bound) and/or --n (max-size bound)")
    if cfg.format == "json":
        for r in reports:
            print(
                json.dumps(
                    {
                        "h": r.h,
                        "k": r.k,
                        "n": r.n,
                        "kind": r.kind,
                        "regime": r.regime,
                        "value": r.value_str(),
                        "exact": isinstance(r.value, int),
                        "vacuous": r.vacuous,
                        "formula": r.formula,
                        "hypotheses": r.hypotheses,
                        "q": r.q,
                        "family": r.family,
                    }
                )
            )
    elif cfg.format == "csv":
        print("kind,regime,h,k,n,value,vacuous")
        for r in reports:
            print(
                f"{r.kind},{r.regime},{r.h},{r.k or ''},{r.n or ''},{r.value_str()},{int(r.vacuous)}"
            )
    else:
        for r in reports:
            target = f"k={r.k}" if r.kind != "max-size-lower" else f"n={r.n}"
            head = f"{r.kind} [{r.regime}] h={r.h} {target}: {r.value_str()}"
            if r.vacuous:
                head += "  (vacuous: formula is non-positive here)"
            if r.q is not None:
                head += f"  via {r.family} q={r.q}"
            print(head)
            if r.formula:
                print(f"  formula: {r.formula}")
            print(f"  hypotheses: {r.hypotheses}")
    return EXIT_OK


_DISPATCH = {
    "construct": cmd_construct,
    "classify": cmd_classify,
    "scan": cmd_scan,
    "greedy": cmd_greedy,
    "exact": cmd_exact,
    "bounds": cmd_bounds,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return _DISPATCH[args.command](args, cfg)
    except AssertionError as exc:
        print(f"error: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (BhSetsError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
