"""Command line entry point: ``torusmotive <subcommand> ...``.

Exit status 0 on success, 1 when a verification or brute-force comparison
fails, 2 for invalid input and 3 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .assembly import config_report, m_irr, r_irr
from .counting import METHODS, CountTable, pair_count
from .eigcfg import MAX_RANK, Partition, configs_for_rank
from .errors import ConsistencyError, InvalidInput, UnsupportedRank
from .ffcheck import RELATIONS, FfParams, compare
from .qpoly import MotivePoly
from .strata import exponents
from .total import total_motive
from .verify import SUITES, run_suite

VARIETIES = ("irr", "total", "repvar-irr")
FORMATS = ("text", "latex", "json")


def _emit(p: MotivePoly, fmt: str, meta: dict) -> str:
    if fmt == "latex":
        return p.to_latex()
    if fmt == "json":
        return json.dumps({**meta, **p.to_dict()})
    return str(p)


def cmd_compute(args) -> int:
    if args.variety == "irr":
        p = m_irr(args.rank, args.n, args.m)
    elif args.variety == "repvar-irr":
        p = r_irr(args.rank, args.n, args.m)
    else:
        p = total_motive(args.rank, args.n, args.m)
    meta = {"rank": args.rank, "n": args.n, "m": args.m, "variety": args.variety}
    print(_emit(p, args.format, meta))
    return 0


def _explain_lines(orbit) -> list[str]:
    ex = exponents(orbit.representative)
    out = [f"      far C = {ex.far}, gauge D = {ex.gauge}"]
    for tg in ex.targets:
        out.append(f"      level {tg.level}->{tg.level + 1} block (dim {tg.block.dim}, "
                   f"mult {tg.block.mult}): C_ij = {tg.c}, D_ij = {tg.d}, factor {tg.factor}")
    return out


def cmd_breakdown(args) -> int:
    if not 1 <= args.rank <= MAX_RANK:
        raise UnsupportedRank(f"rank {args.rank} outside 1..{MAX_RANK}")
    cfgs = configs_for_rank(args.rank)
    if args.config is not None:
        if not 0 <= args.config < len(cfgs):
            raise InvalidInput(f"config index must lie in 0..{len(cfgs) - 1}")
        chosen = [(args.config, cfgs[args.config])]
    else:
        chosen = list(enumerate(cfgs))
    if args.format == "json":
        print(json.dumps([{"index": i, **config_report(c).to_dict()} for i, c in chosen]))
        return 0
    for i, cfg in chosen:
        rep = config_report(cfg)
        print(f"[{i}] kappa = {cfg}")
        print(f"    R_kappa = {rep.r_kappa}")
        print(f"    R_red   = {rep.r_red}")
        print(f"    R_irr   = {rep.r_irr}")
        print(f"    M_irr   = {rep.m_irr}")
        print(f"    {len(rep.strata)} reducible types:")
        for s in rep.strata:
            row = s.row()
            print(f"    - {row['type']}")
            print(f"      M_tau = {row['M_tau']}; G_tau = {row['G_tau']}; "
                  f"irr = {row['irr']}; m = {row['multiplicity']}")
            if args.explain:
                print("\n".join(_explain_lines(s.type_orbit)))
    return 0


def cmd_count(args) -> int:
    if (args.pi1 is None) != (args.pi2 is None):
        raise InvalidInput("give both --pi1 and --pi2, or neither")
    if args.pi1 is None:
        tab = CountTable.build(args.n, args.m, args.rank, args.method)
        print(json.dumps(tab.to_dict()) if args.format == "json" else tab.render())
        return 0
    p1, p2 = Partition.parse(args.pi1), Partition.parse(args.pi2)
    k = pair_count(args.n, args.m, args.rank, p1, p2, args.method)
    if args.format == "json":
        print(json.dumps({"n": args.n, "m": args.m, "rank": args.rank, "pi1": p1.spec(),
                          "pi2": p2.spec(), "method": args.method, "count": k}))
    else:
        print(k)
    return 0


def cmd_ffcount(args) -> int:
    p = FfParams(args.q, args.n, args.m, require_roots=not args.no_root_check,
                 relation=args.relation)
    rep = compare(p, full=args.full)
    if args.format == "json":
        print(json.dumps(rep.to_dict()))
        return 0 if rep.ok else 1
    print(f"q={p.q} n={p.n} m={p.m} relation={p.relation}")
    print(f"  total:       measured {rep.measured_total}  predicted {rep.predicted_total}")
    if args.irreducible:
        print(f"  irreducible: measured {rep.measured_irr}  predicted {rep.predicted_irr}")
        ok = rep.ok
    else:
        ok = rep.measured_total == rep.predicted_total
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torusmotive",
                                 description="Motives of SL_r character varieties of torus knots")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="motive of a character or representation variety")
    c.add_argument("--rank", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--variety", choices=VARIETIES, default="irr")
    c.add_argument("--format", choices=FORMATS, default="text")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("breakdown", help="per-configuration and per-type tables")
    b.add_argument("--rank", type=int, required=True)
    b.add_argument("--config", type=int, default=None, help="index into the admissible list")
    b.add_argument("--explain", action="store_true", help="show intermediate exponents")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.set_defaults(func=cmd_breakdown)

    k = sub.add_parser("count", help="number of eigenvalue configurations")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--rank", type=int, required=True)
    k.add_argument("--pi1", help='partition spec such as "2^1,1^2"')
    k.add_argument("--pi2")
    k.add_argument("--method", choices=METHODS, default="closed")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_count)

    f = sub.add_parser("ffcount", help="brute-force point count over F_q (rank 2)")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--irreducible", action="store_true", help="also compare irreducible pairs")
    f.add_argument("--relation", choices=RELATIONS, default="scalar")
    f.add_argument("--full", action="store_true", help="plain double loop instead of buckets")
    f.add_argument("--no-root-check", action="store_true",
                   help="allow fields without the needed roots of unity")
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_ffcount)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.set_defaults(func=cmd_verify)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConsistencyError as e:
        print(f"consistency failure: {type(e).__name__}: {e}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
