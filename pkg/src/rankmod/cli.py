"""rankmod command line: cost/plan queries, ball and degree counts,
dominating-set tools, code build/verify/encode/decode, and the simulator."""

from __future__ import annotations

import argparse
import json
import sys

from . import balls, codes, domination, sim
from .cost import cost, minimal_push_up_plan, push_to_top_plan
from .perms import parse


class CliError(Exception):
    pass


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(args, text: str):
    if not args.quiet:
        print(text)


def _rate_str(x: float) -> str:
    return f"{x:.4f}"


def cmd_cost(args) -> int:
    u = parse(args.from_state)
    v = parse(args.to_state, u.n)
    if args.scheme == "minpush":
        c = cost(u, v)
        plan = minimal_push_up_plan(u, v) if args.show_plan else None
    else:
        plan = push_to_top_plan(u, v)
        c = len(plan)
        if not args.show_plan:
            plan = None
    if args.json:
        doc = {"from": str(u), "to": str(v), "scheme": args.scheme, "cost": c}
        if plan is not None:
            doc["plan"] = [str(op) for op in plan]
        _emit(args, json.dumps(doc))
    else:
        _emit(args, str(c))
        if plan is not None and len(plan):
            _emit(args, str(plan))
    return 0


def cmd_plan(args) -> int:
    u = parse(args.from_state)
    v = parse(args.to_state, u.n)
    plan = (
        minimal_push_up_plan(u, v)
        if args.scheme == "minpush"
        else push_to_top_plan(u, v)
    )
    if args.json:
        _emit(args, json.dumps({"scheme": args.scheme, "ops": [str(op) for op in plan]}))
    elif len(plan):
        _emit(args, str(plan))
    return 0


def cmd_ball(args) -> int:
    u = parse(args.center)
    members = balls.ball_enumerate(u, args.radius)
    if args.json:
        doc = {"center": str(u), "radius": args.radius, "count": len(members)}
        if args.list:
            doc["members"] = [str(v) for v in members]
        _emit(args, json.dumps(doc))
    elif args.list:
        for v in members:
            _emit(args, str(v))
    else:
        _emit(args, str(len(members)))
    return 0


def cmd_degree(args) -> int:
    d = balls.ball_size_formula(args.n, 1) - 1 if args.n > 1 else 0
    _emit(args, json.dumps({"n": args.n, "out_degree": d}) if args.json else str(d))
    return 0


def cmd_domset_verify(args) -> int:
    doc = json.loads(_read_file(args.file))
    results = []
    ok = True
    for i, states in enumerate(doc):
        members = [parse(s, args.n) for s in states]
        good = domination.is_dominating(members, radius=args.radius)
        ok &= good
        results.append({"set": i, "size": len(members), "dominating": good})
    if args.json:
        _emit(args, json.dumps(results))
    else:
        for r in results:
            _emit(args, f"set {r['set']}: size {r['size']} "
                        f"{'dominating' if r['dominating'] else 'NOT dominating'}")
    return 0 if ok else 1


def cmd_domset_bound(args) -> int:
    lb = domination.lower_bound(args.n)
    rub = domination.rate_upper_bound(args.n)
    if args.json:
        _emit(args, json.dumps({"n": args.n, "size_lower_bound": lb,
                                "rate_upper_bound": rub}))
    else:
        _emit(args, f"size lower bound: {lb}")
        _emit(args, f"rate upper bound: {_rate_str(rub)}")
    return 0


def cmd_domset_search(args) -> int:
    groups = domination.greedy_partition_search(args.n, args.radius)
    if args.json:
        _emit(args, json.dumps({"n": args.n, "radius": args.radius,
                                "count": len(groups),
                                "sets": [[str(u) for u in g] for g in groups]}))
    else:
        _emit(args, f"{len(groups)} dominating sets")
        for g in groups:
            _emit(args, " ".join(str(u) for u in g))
    return 0


def _build_code(n: int) -> codes.RewriteCode:
    if n == 4:
        return codes.build_n4()
    if n == 5:
        return codes.build_n5()
    return codes.build_general(n)


def cmd_code_build(args) -> int:
    if args.n < 4:
        raise CliError("code constructions need n >= 4")
    text = codes.code_to_json(_build_code(args.n))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        _emit(args, text)
    return 0


def cmd_code_verify(args) -> int:
    code = codes.code_from_json(_read_file(args.file))
    report = codes.verify_code(code)
    if args.json:
        _emit(args, json.dumps(report.to_dict()))
    else:
        _emit(args, f"partition: {'ok' if report.partition_ok else 'FAILED'}")
        _emit(args, f"classes dominating at r={report.radius}: "
                    f"{'all' if report.all_dominating else 'FAILED'}")
        _emit(args, f"class sizes: {report.class_sizes}")
        _emit(args, f"rate: {_rate_str(report.rate)} bits per cell")
        _emit(args, f"size lower bound: {report.size_lower_bound}")
        if report.optimal_full_assignment:
            _emit(args, "optimal full assignment")
    return 0 if report.ok else 1


def cmd_code_encode(args) -> int:
    code = codes.code_from_json(_read_file(args.file))
    current = parse(args.state, code.n)
    res = codes.encode(code, current, args.symbol)
    if args.json:
        _emit(args, json.dumps({"new_state": str(res.new_state),
                                "cost": res.incurred_cost}))
    else:
        _emit(args, f"{res.new_state} cost {res.incurred_cost}")
    return 0


def cmd_code_decode(args) -> int:
    code = codes.code_from_json(_read_file(args.file))
    sym = codes.decode(code, parse(args.state, code.n))
    _emit(args, json.dumps({"symbol": sym}) if args.json else str(sym))
    return 0


def cmd_sim(args) -> int:
    code = codes.code_from_json(_read_file(args.code))
    summary = sim.compare_schemes(code, args.trials, args.len, args.seed,
                                  budget=args.budget)
    if args.scheme != "both":
        summary.rows = [r for r in summary.rows if r["scheme"] == args.scheme]
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(summary.to_csv())
    if args.json:
        _emit(args, json.dumps(summary.rows))
    else:
        _emit(args, summary.to_table())
    return 0


def _perm_flag(p, name, dest, help):
    p.add_argument(name, dest=dest, required=True, metavar='"[...]"', help=help)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankmod", description=__doc__)
    ap.add_argument("--json", action="store_true", help="machine readable output")
    ap.add_argument("--quiet", action="store_true", help="suppress normal output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cost", help="rewrite cost between two states")
    _perm_flag(p, "--from", "from_state", "current state")
    _perm_flag(p, "--to", "to_state", "target state")
    p.add_argument("--scheme", choices=["minpush", "pushtop"], default="minpush")
    p.add_argument("--show-plan", action="store_true")
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("plan", help="print the push plan between two states")
    _perm_flag(p, "--from", "from_state", "current state")
    _perm_flag(p, "--to", "to_state", "target state")
    p.add_argument("--scheme", choices=["minpush", "pushtop"], default="minpush")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("ball", help="enumerate or count a cost ball")
    _perm_flag(p, "--center", "center", "ball center")
    p.add_argument("--radius", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("degree", help="out-degree of the rewrite graph")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("domset", help="dominating set tools")
    dsub = p.add_subparsers(dest="domset_command", required=True)
    d = dsub.add_parser("verify", help="verify candidate sets from a JSON file")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--radius", type=int, default=1)
    d.add_argument("--file", required=True, help="JSON list of lists of states; - for stdin")
    d.set_defaults(func=cmd_domset_verify)
    d = dsub.add_parser("bound", help="size and rate bounds")
    d.add_argument("--n", type=int, required=True)
    d.set_defaults(func=cmd_domset_bound)
    d = dsub.add_parser("search", help="greedy partition into dominating sets")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--radius", type=int, default=1)
    d.set_defaults(func=cmd_domset_search)

    p = sub.add_parser("code", help="rewrite code tools")
    csub = p.add_subparsers(dest="code_command", required=True)
    c = csub.add_parser("build", help="build the construction for a given n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--out", help="write JSON here instead of stdout")
    c.set_defaults(func=cmd_code_build)
    c = csub.add_parser("verify", help="verify a code JSON file")
    c.add_argument("--file", required=True, help="code JSON; - for stdin")
    c.set_defaults(func=cmd_code_verify)
    c = csub.add_parser("encode", help="rewrite to a target symbol")
    c.add_argument("--file", required=True)
    _perm_flag(c, "--state", "state", "current state")
    c.add_argument("--symbol", type=int, required=True)
    c.set_defaults(func=cmd_code_encode)
    c = csub.add_parser("decode", help="read the symbol of a state")
    c.add_argument("--file", required=True)
    _perm_flag(c, "--state", "state", "stored state")
    c.set_defaults(func=cmd_code_decode)

    p = sub.add_parser("sim", help="compare programming schemes on random traces")
    p.add_argument("--code", required=True, help="code JSON; - for stdin")
    p.add_argument("--scheme", choices=["minpush", "pushtop", "both"], default="both")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--len", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.add_argument("--csv", help="write per-trial rows to this CSV file")
    p.set_defaults(func=cmd_sim)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, CliError, OSError, json.JSONDecodeError) as exc:
        print(f"rankmod: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
