"""Command-line front end.

Domains are given as JSON, either inline (first non-space character "{")
or as a path to a file.  Rationals in any JSON field are "p/q" strings,
"p" strings, or plain integers.

Exit codes: 0 success (an obstruction verdict is a successful run), 1
validation or input error, 2 internal limit (weight recursion depth cap, or
a truncation warning escalated by --strict).

All output is deterministic: a fixed domain, subcommand, and format yields
byte-identical bytes on every run.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction

from . import capacities
from .capacities import (TruncationWarning, capacity_sequence, ck,
                         ck_convex_via_weights, witness_to_json)
from .domains import (Ball, ConcaveToric, ConvexToric, Domain, Ellipsoid,
                      Polydisk, domain_from_json, volume)
from .geometry import rational_str
from .norms import concave_context, convex_context
from .obstructions import asymptotic_ratio, check_embedding
from .paths import max_concave, min_convex, path_to_json
from .weights import DepthCapError, negative_weight_sequence, weight_expansion


def parse_domain_spec(text: str) -> Domain:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed domain JSON at line {e.lineno}, "
                         f"column {e.colno}: {e.msg}") from None
    return domain_from_json(obj)


def _load_domain(arg: str) -> Domain:
    if arg.lstrip().startswith("{"):
        return parse_domain_spec(arg)
    try:
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ValueError(f"cannot read domain file {arg!r}: {e.strerror}") from None
    return parse_domain_spec(text)


def _decimal(v: Fraction) -> float:
    # 6 significant digits next to the exact rational
    return float(f"{float(v):.6g}")


def _decimal_str(v: Fraction) -> str:
    return f"{float(v):.6g}"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _result_json(res: capacities.CapacityResult) -> dict:
    return {"k": res.k, "c": rational_str(res.value),
            "decimal": _decimal(res.value), "method": res.method,
            "witness": witness_to_json(res.witness)}


def _result_csv_row(res: capacities.CapacityResult) -> str:
    return f"{res.k},{rational_str(res.value)},{_decimal_str(res.value)},{res.method}"


def _capacity_results(domain: Domain, ks, l_max):
    if l_max is None:
        if len(ks) > 1:
            return capacity_sequence(domain, ks[-1])
        return [ck(domain, k) for k in ks]
    # the flag selects the head/negative-ball formula; the weight module
    # rejects domains that are not convex toric
    return [ck_convex_via_weights(domain, k, l_max=l_max) for k in ks]


def _cmd_capacity(args) -> int:
    domain = _load_domain(args.domain)
    res = _capacity_results(domain, [args.k], args.l_max)[0]
    if args.format == "json":
        print(_dumps(_result_json(res)))
    elif args.format == "csv":
        print("k,c,decimal,method")
        print(_result_csv_row(res))
    else:
        print(f"c_{res.k} = {rational_str(res.value)}")
    return 0


def _cmd_sequence(args) -> int:
    domain = _load_domain(args.domain)
    results = _capacity_results(domain, list(range(args.kmax + 1)), args.l_max)
    if args.format == "json":
        print(_dumps([_result_json(r) for r in results]))
    elif args.format == "csv":
        print("k,c,decimal,method")
        for r in results:
            print(_result_csv_row(r))
    else:
        for r in results:
            print(f"c_{r.k} = {rational_str(r.value)}")
    return 0


def _cmd_obstruct(args) -> int:
    src = _load_domain(args.source)
    tgt = _load_domain(args.target)
    rep = check_embedding(src, tgt, args.kmax)
    if args.format == "json":
        print(_dumps({
            "verdict": rep.verdict,
            "first_k": rep.first_k,
            "c_source": None if rep.c_source is None else rational_str(rep.c_source),
            "c_target": None if rep.c_target is None else rational_str(rep.c_target),
            "k_max": rep.k_max,
            "volume_ok": rep.volume_ok,
            "table": [[k, rational_str(cs), rational_str(ct)]
                      for k, cs, ct in rep.table],
        }))
    elif args.format == "csv":
        print("k,c_source,c_target")
        for k, cs, ct in rep.table:
            print(f"{k},{rational_str(cs)},{rational_str(ct)}")
    else:
        print(f"{'k':>4}  {'c_source':>12}  {'c_target':>12}")
        for k, cs, ct in rep.table:
            mark = "  <-- violation" if rep.obstructed and k == rep.first_k else ""
            print(f"{k:>4}  {rational_str(cs):>12}  {rational_str(ct):>12}{mark}")
        if rep.obstructed:
            print(f"obstructed at k={rep.first_k}: "
                  f"{rational_str(rep.c_source)} > {rational_str(rep.c_target)}")
        else:
            print(f"no obstruction up to k={rep.k_max}")
        print(f"volume check (source <= target): {'ok' if rep.volume_ok else 'exceeded'}")
    return 0


def _cmd_weights(args) -> int:
    domain = _load_domain(args.domain)
    if isinstance(domain, (Ball, Ellipsoid, ConcaveToric)):
        ws = weight_expansion(domain, depth_cap=args.depth_cap)
        head = None
        ok = sum((w * w / 2 for w in ws), Fraction(0)) == volume(domain)
    elif isinstance(domain, (Polydisk, ConvexToric)):
        dec = negative_weight_sequence(domain, depth_cap=args.depth_cap)
        ws = dec.negatives
        head = rational_str(dec.head)
        total = sum((w * w / 2 for w in ws), Fraction(0))
        ok = dec.head * dec.head / 2 - total == volume(domain)
    else:
        raise ValueError("weights apply to toric domains only")
    print(_dumps({"head": head, "weights": [rational_str(w) for w in ws],
                  "volume_check": ok}))
    return 0


def _cmd_asymptotics(args) -> int:
    domain = _load_domain(args.domain)
    rep = asymptotic_ratio(domain, args.k)
    mid = (rep.model_low + rep.model_high) / 2
    print(_dumps({
        "k": rep.k,
        "c": rational_str(rep.value),
        "decimal": _decimal(rep.value),
        "model_low": rational_str(rep.model_low),
        "model_high": rational_str(rep.model_high),
        "model_decimal": _decimal(mid),
        "residual_high": rational_str(rep.residual_high),
        "residual_decimal": _decimal(rep.residual_high),
    }))
    return 0


def _default_path_kind(domain: Domain) -> str:
    if isinstance(domain, ConcaveToric):
        return "concave"
    return "convex"


def _cmd_paths(args) -> int:
    domain = _load_domain(args.domain)
    kind = args.kind or _default_path_kind(domain)
    if kind == "convex":
        opt = min_convex(convex_context(domain), args.k, args.bound_mode,
                         fast_monotone=args.fast_monotone)
    else:
        if args.bound_mode != "at_least":
            raise ValueError("--bound-mode applies to convex paths only")
        if args.fast_monotone:
            raise ValueError("--fast-monotone applies to convex paths only")
        opt = max_concave(concave_context(domain), args.k)
    print(_dumps({
        "kind": kind,
        "k": args.k,
        "value": rational_str(opt.value),
        "decimal": _decimal(opt.value),
        "count": opt.count_constraint,
        "witness": path_to_json(opt.witness),
    }))
    return 0


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcap",
        description="Exact capacity sequences of four-dimensional toric "
                    "domains, with embedding-obstruction reports.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_domain(p):
        p.add_argument("-d", "--domain", required=True,
                       help="domain spec: JSON file path or inline JSON")

    p = sub.add_parser("capacity", help="one capacity value c_k")
    add_domain(p)
    p.add_argument("-k", type=_nonneg, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--l-max", type=_nonneg, default=None,
                   help="compute through the head/negative-ball formula with "
                        "this shift truncation (convex toric domains)")
    p.add_argument("--strict", action="store_true",
                   help="escalate truncation warnings to exit code 2")
    p.set_defaults(func=_cmd_capacity)

    p = sub.add_parser("sequence", help="capacities c_0..c_kmax")
    add_domain(p)
    p.add_argument("--kmax", type=_nonneg, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--l-max", type=_nonneg, default=None)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("obstruct", help="embedding obstruction scan")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--kmax", type=_nonneg, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=_cmd_obstruct)

    p = sub.add_parser("weights", help="ball decomposition of a toric domain")
    add_domain(p)
    p.add_argument("--depth-cap", type=_nonneg, default=64)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("asymptotics", help="compare c_k against 2*sqrt(vol*k)")
    add_domain(p)
    p.add_argument("-k", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_asymptotics)

    p = sub.add_parser("paths", help="optimal witness path for (domain, k)")
    add_domain(p)
    p.add_argument("-k", type=_nonneg, required=True)
    p.add_argument("--kind", choices=("convex", "concave"), default=None,
                   help="default: concave for concave toric domains, else convex")
    p.add_argument("--bound-mode", choices=("at_least", "exact"),
                   default="at_least")
    p.add_argument("--fast-monotone", action="store_true",
                   help="restrict the convex search to monotone staircases")
    p.set_defaults(func=_cmd_paths)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache_dir = os.environ.get("CAPACITY_CACHE_DIR")
    try:
        if cache_dir:
            try:
                capacities.load_disk_cache(cache_dir)
            except ValueError as e:
                print(f"warning: ignoring capacity cache: {e}", file=sys.stderr)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        if getattr(args, "strict", False) and any(
                isinstance(w.message, TruncationWarning) for w in caught):
            return 2
        if cache_dir and code == 0:
            try:
                capacities.save_disk_cache(cache_dir)
            except OSError as e:
                print(f"warning: could not save capacity cache: {e}",
                      file=sys.stderr)
        return code
    except DepthCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
