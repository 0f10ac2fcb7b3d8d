"""Command-line interface: ``twocayley <command> ...``.

Every command prints one JSON record (``--csv`` flattens it) carrying the
command, its inputs, the results and how each diameter was certified:
``formula`` (closed form), ``mdd`` (congruence-checked diagram) or ``bfs``.
Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import random
import sys

import numpy as np

from . import __version__
from .digraph import DEFAULT_MAX_BFS_ORDER, CayleyDigraph2, congruence_mdds, find_mdds, parse_digraph
from .families import FamilyId, extended_family, family_member, table4_family
from .intmath import isqrt, lower_bound_diameter
from .lshape import LShape
from .lshape import diameter as lshape_diameter
from .procedures import (TightnessReport, certify_diameter, extend, extension_coefficient,
                         has_infinite_tight_extensions, quotient)
from .search import ImprovementRecord, OptimalityResult, optimal_diameters, qe_improve
from .snf import digraph_of, matrix_of, smith_normal_form
from .verify import verify_table1, verify_table2, verify_table3, verify_table4


def encode(obj):
    """JSON-ready form of library objects."""
    if isinstance(obj, CayleyDigraph2):
        g = obj.group
        return {"group": [g.s1, g.s2], "a": list(obj.a), "b": list(obj.b), "text": str(obj)}
    if isinstance(obj, LShape):
        return {"l": obj.l, "h": obj.h, "w": obj.w, "y": obj.y, "text": str(obj)}
    if isinstance(obj, TightnessReport):
        return dataclasses.asdict(obj)
    if isinstance(obj, OptimalityResult):
        return {"N": obj.N, "lb": obj.lb, "d1": obj.d1, "d2": obj.d2, "d3": obj.d3,
                "witnesses": {k: {"mdd": encode(L), "digraph": encode(d)}
                              for k, (L, d) in obj.witnesses.items()}}
    if isinstance(obj, ImprovementRecord):
        return {"original": encode(obj.original), "original_report": encode(obj.original_report),
                "m": obj.m, "intermediate_area": obj.intermediate_area, "base": encode(obj.base),
                "improved": encode(obj.improved), "improved_report": encode(obj.improved_report),
                "improved_mdd": encode(obj.improved_mdd)}
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def _report(d: CayleyDigraph2, args) -> TightnessReport:
    return certify_diameter(d, max_order=args.max_order, formula_only=args.formula_only)


def cmd_lb(args):
    return {"N": args.N}, {"lb": lower_bound_diameter(args.N), "certification": "formula"}


def cmd_diam(args):
    d = parse_digraph(args.digraph)
    rep = _report(d, args)
    return {"digraph": d}, {"diameter": rep.diameter, "report": rep, "certification": rep.method}


def cmd_mdd(args):
    d = parse_digraph(args.digraph)
    if args.formula_only or d.order > args.max_order:
        rep = certify_diameter(d, formula_only=True)
        mdds = congruence_mdds(d, rep.diameter)
    else:
        mdds = find_mdds(d, args.max_order)
        rep = TightnessReport.of(d.order, lshape_diameter(mdds[0]), "bfs")
    return {"digraph": d}, {"mdds": mdds, "report": rep, "certification": rep.method}


def cmd_snf(args):
    L = LShape(args.l, args.h, args.w, args.y)
    snf = smith_normal_form(matrix_of(L))
    d = digraph_of(L)
    return {"lshape": L}, {"s1": snf.s1, "s2": snf.s2, "U": snf.U, "V": snf.V, "digraph": d,
                           "certification": "mdd"}


def cmd_extend(args):
    d = parse_digraph(args.digraph)
    e = extend(d, args.m)
    rep = _report(e, args)
    return {"digraph": d, "m": args.m}, {"extension": e, "report": rep, "certification": rep.method}


def cmd_quotient(args):
    d = parse_digraph(args.digraph)
    q = quotient(d, args.m)
    rep = _report(q, args)
    return {"digraph": d, "m": args.m}, {"quotient": q, "report": rep, "certification": rep.method}


def cmd_coeff(args):
    N = args.N
    if has_infinite_tight_extensions(N):
        t = isqrt(N // 3)
        return {"N": N}, {"c": f"infinite (N=3t², t={t})", "certification": "formula"}
    return {"N": N}, {"c": extension_coefficient(N), "certification": "formula"}


def cmd_search(args):
    res = optimal_diameters(args.N)
    return {"N": args.N}, {"optimum": res, "certification": "mdd"}


def cmd_family(args):
    fid = FamilyId(args.id)
    if fid.value.startswith("LXZ"):
        rec = table4_family(fid, args.param)
        return {"id": fid.value, "param": args.param}, {"record": rec, "certification": "mdd"}
    if args.m is not None:
        if not fid.value.startswith("MaxCoeff"):
            raise ValueError("--m applies to the MaxCoeff families only")
        d = extended_family(args.param, int(fid.value[-1]), args.m)
        rep = _report(d, args)
        return ({"id": fid.value, "param": args.param, "m": args.m},
                {"digraph": d, "report": rep, "certification": rep.method})
    member = family_member(fid, args.param)
    return ({"id": fid.value, "param": args.param},
            {"digraph": member.digraph, "mdd": member.mdd, "report": member.report,
             "certification": member.report.method})


def cmd_improve(args):
    rec = qe_improve(args.N, args.k)
    return {"N": args.N, "k": args.k}, {"record": rec, "certification": "formula"}


def cmd_verify(args):
    if args.table == 1:
        rows = verify_table1(args.max_order)
    elif args.table == 2:
        rows = verify_table2(args.t_max, args.max_order, args.formula_only)
    elif args.table == 3:
        rows = verify_table3(args.max_order, args.formula_only, not args.no_search)
    else:
        rows = verify_table4(args.param_max, args.max_order, args.formula_only)
    records = [{"table": r.table, "row": r.label,
                "status": {True: "PASS", False: "FAIL", None: "SKIP"}[r.passed],
                "certification": r.method, "details": r.details} for r in rows]
    failed = any(r.passed is False for r in rows)
    return {"table": args.table}, {"rows": records, "failed": failed}


def cmd_figure2(args):
    from .procedures import coefficient_table

    return {"N_max": args.N_max}, {"rows": coefficient_table(args.N_max)}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=_positive, default=DEFAULT_MAX_BFS_ORDER,
                        help="largest order certified by BFS")
    common.add_argument("--formula-only", action="store_true",
                        help="certify diameters by diagrams only, never BFS")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomised checks (recorded in the output)")

    parser = argparse.ArgumentParser(prog="twocayley",
                                     description="2-Cayley digraphs via L-shaped diagrams")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("lb", cmd_lb, "lower bound ceil(sqrt(3N)) - 2").add_argument("N", type=_positive)
    add("diam", cmd_diam, "diameter of a digraph").add_argument("digraph")
    add("mdd", cmd_mdd, "minimum distance diagrams of a digraph").add_argument("digraph")
    p = add("snf", cmd_snf, "Smith normal form and digraph of L(l,h,w,y)")
    for name in ("l", "h", "w", "y"):
        p.add_argument(name, type=int)
    p = add("extend", cmd_extend, "m-extension of a digraph")
    p.add_argument("digraph")
    p.add_argument("m", type=_positive)
    p = add("quotient", cmd_quotient, "m-quotient of a digraph")
    p.add_argument("digraph")
    p.add_argument("m", type=_positive)
    add("coeff", cmd_coeff, "extension coefficient c(N)").add_argument("N", type=_positive)
    add("search", cmd_search, "optimal diameters over cyclic and non-cyclic groups").add_argument(
        "N", type=_positive)
    p = add("family", cmd_family, "member of a closed-form family")
    p.add_argument("id", choices=[f.value for f in FamilyId])
    p.add_argument("param", type=int)
    p.add_argument("--m", type=_positive, default=None, help="extension factor (MaxCoeff ids)")
    p = add("improve", cmd_improve, "quotient-extension improvement of a k-tight order")
    p.add_argument("N", type=_positive)
    p.add_argument("k", type=int)
    p = add("verify", cmd_verify, "reproduce a published table")
    p.add_argument("table", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--t-max", type=_positive, default=8)
    p.add_argument("--param-max", type=_positive, default=10)
    p.add_argument("--no-search", action="store_true", help="table 3: skip the improvement search")
    add("figure2", cmd_figure2, "CSV of c(N) for 4 <= N <= N_max").add_argument(
        "N_max", type=_positive)
    return parser


def _flatten(prefix: str, value, out: list):
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, json.dumps(value) if isinstance(value, list) else value))


def emit(args, inputs, results, stream=None) -> None:
    stream = stream or sys.stdout
    if args.command == "figure2":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["N", "c"])
        writer.writerows(results["rows"])
        return
    record = {"command": args.command, "inputs": encode(inputs), "results": encode(results)}
    if args.seed is not None:
        record["seed"] = args.seed
    if args.format == "csv":
        rows: list = []
        _flatten("", record, rows)
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
    else:
        json.dump(record, stream, ensure_ascii=False)
        stream.write("\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
        np.random.seed(args.seed)
    try:
        inputs, results = args.func(args)
    except ValueError as exc:
        # includes OrderTooLargeError: BFS cap exceeded without --formula-only
        print(f"twocayley: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"twocayley: consistency check failed: {exc}", file=sys.stderr)
        return 1
    emit(args, inputs, results)
    if args.command == "verify" and results["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
