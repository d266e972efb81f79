"""Command line front end: ``mahonia stat|dist|verify|table1|bij``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import harness
from .bijections import (eta, eta_inv, gamma_sweep, gamma_sweep_inv, phi_fhv,
                         phi_rgf, phi_rgf_inv, psi_traced, xi, xi_inv, zeta,
                         zeta_inv)
from .omp import eta_hat, parse_omp
from .perms import format_perm, is_permutation, parse_perm
from .qseries import QPoly
from .words import format_word, parse_word


def _fw(w) -> str:
    return format_word(w, compact=True)


def _jsonable(v):
    if isinstance(v, (tuple, list, frozenset, set)):
        return [_jsonable(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
    return v


def _cmd_stat(args) -> int:
    obj_text = args.object
    if "|" in obj_text or args.name in ("maj", "inv", "blocks", "size"):
        kind, obj = "omp", parse_omp(obj_text)
    elif args.name in harness.PERM_STATS or args.name not in harness.WORD_STATS:
        kind, obj = "perm", parse_perm(obj_text)
    else:
        kind, obj = "word", parse_word(obj_text)
    print(json.dumps(_jsonable(harness.evaluate_stat(kind, args.name, obj))))
    return 0


def _csv_cell(x) -> str:
    """Integers as is; sets and vectors as space-separated letters."""
    if isinstance(x, (tuple, list)):
        return " ".join(map(str, x))
    return str(x)


def _split_stats(values: list[str]) -> tuple[str, ...]:
    return tuple(s for v in values for s in v.split(",") if s)


def _cmd_dist(args) -> int:
    beta = tuple(int(x) for x in args.beta.split(",")) if args.beta else None
    req = harness.DistributionRequest(
        family=args.family, n=args.n, k=args.k, stats=_split_stats(args.stat),
        beta=beta, pattern=args.pattern, des=args.des)
    result = harness.distribution(req)
    if isinstance(result, QPoly):
        rows = [((e,), c) for e, c in enumerate(result.coeffs) if c]
    else:
        rows = sorted(result.items())
    if args.json:
        if isinstance(result, QPoly):
            print(json.dumps({"stats": list(req.stats), "coeffs": result.to_list()}))
        else:
            print(json.dumps({"stats": list(req.stats),
                              "rows": [{"value": _jsonable(v), "count": c} for v, c in rows]}))
    elif args.csv:
        print(",".join(req.stats) + ",count")
        for v, c in rows:
            print(",".join(_csv_cell(x) for x in v) + f",{c}")
    elif isinstance(result, QPoly):
        print(result)
    else:
        for v, c in rows:
            print(f"{c}\t{json.dumps(_jsonable(v))}")
    return 0


def _run_one(job: tuple[str, int | None]) -> dict:
    cid, max_n = job
    return harness.verify(cid, max_n).to_json()


def _cmd_verify(args) -> int:
    ids = harness.catalog_ids() if args.id == "all" else [args.id]
    for cid in ids:
        if cid not in harness.CATALOG:
            raise ValueError(f"unknown check {cid!r}; valid: all, {', '.join(harness.CATALOG)}")
    jobs = [(cid, args.max_n) for cid in ids]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    if args.json:
        print(json.dumps(results if args.id == "all" else results[0], indent=2))
    else:
        for r in results:
            status = "PASS" if r["pass"] else "FAIL"
            print(f"{status}  {r['id']:<20} {r['range']:<7} {r['millis']:>10.1f} ms")
            if "counterexample" in r:
                print(f"      counterexample: {json.dumps(r['counterexample'])}")
            for w in r.get("warnings", ()):
                print(f"      warning: {w}")
    return 0 if all(r["pass"] for r in results) else 1


def _cmd_table1(args) -> int:
    rows = harness.table1()
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=2))
        return 0
    fmt = "{:<6} {:<11} {:<9} {:>3} {:>4}"
    print(fmt.format("perm", "Db", "Id", "MAJ", "BAST"))

    def s(x):
        return "{" + ",".join(map(str, sorted(x))) + "}"
    for r in rows:
        print(fmt.format(format_perm(r.perm), s(r.Db), s(r.Id), r.MAJ, r.BAST))
    return 0


_WORD_MAPS = {
    "xi": xi, "xi-inv": xi_inv, "phi-rgf": phi_rgf, "phi-rgf-inv": phi_rgf_inv,
    "zeta": zeta, "zeta-inv": zeta_inv, "eta": eta, "eta-inv": eta_inv,
}
BIJECTIONS = sorted([*_WORD_MAPS, "gamma", "gamma-inv", "psi", "phi-fhv", "eta-hat"])


def _cmd_bij(args) -> int:
    name = args.name
    trace = None
    if name in _WORD_MAPS:
        out = _fw(_WORD_MAPS[name](parse_word(args.object)))
    elif name in ("gamma", "gamma-inv"):
        fn = gamma_sweep if name == "gamma" else gamma_sweep_inv
        u, tr = fn(parse_word(args.object))
        out, trace = _fw(u), tr.to_dict()
    elif name == "psi":
        p, steps = psi_traced(parse_perm(args.object))
        out, trace = format_perm(p), [s.to_dict() for s in steps]
    elif name == "phi-fhv":
        v = parse_word(args.object)
        out = _fw(phi_fhv(v)) if not is_permutation(v) else format_perm(phi_fhv(v))
    elif name == "eta-hat":
        out = str(eta_hat(parse_omp(args.object)))
    else:
        raise ValueError(f"unknown bijection {name!r}; valid: {', '.join(BIJECTIONS)}")
    if args.trace:
        print(json.dumps({"name": name, "input": args.object, "output": out, "trace": trace}, indent=2))
    else:
        print(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mahonia", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stat", help="evaluate one statistic on a word, permutation or ordered multiset partition")
    p.add_argument("name")
    p.add_argument("object")
    p.set_defaults(func=_cmd_stat)

    p = sub.add_parser("dist", help="distribution of statistics over a family")
    p.add_argument("--family", required=True, choices=sorted(harness.FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--des", type=int)
    p.add_argument("--beta", help="composition, e.g. 2,2,1")
    p.add_argument("--pattern", help="vincular pattern to avoid, e.g. 1_32")
    p.add_argument("--stat", action="append", required=True,
                   help="statistic name; repeat or comma-separate for a joint table")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true")
    out.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("verify", help="run checks from the verification catalog")
    p.add_argument("id", help="check id or 'all'")
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table1", help="the four-statistic table on S_4(1_32)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("bij", help="apply a bijection")
    p.add_argument("name", choices=BIJECTIONS)
    p.add_argument("object")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_bij)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"mahonia: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
