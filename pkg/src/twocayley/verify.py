"""Row-by-row reproduction of the published tables.

Each check returns :class:`RowResult` records; a table passes when every
row does.  Diameters are BFS-certified up to ``max_order`` and otherwise
certified by a congruence-checked diagram, with ``method`` saying which.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import DEFAULT_MAX_BFS_ORDER, CayleyDigraph2, diameter, is_mdd_for, parse_digraph
from .families import table2_family, table4_family
from .fixtures import TABLE1, TABLE2_DIAMETERS, TABLE2_ORDERS, TABLE3, TABLE4, ImprovementRow
from .intmath import lower_bound_diameter
from .lshape import diameter as lshape_diameter
from .lshape import scale
from .procedures import certify_diameter, extended_diameter, quotient
from .search import optimal_diameters, qe_improve


@dataclass
class RowResult:
    table: int
    label: str
    passed: bool | None  # None for rows skipped under the BFS cap
    method: str
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]
        extras = " ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{status} table {self.table} {self.label} [{self.method}] {extras}".rstrip()


def _bfs_or_none(d: CayleyDigraph2, max_order: int, formula_only: bool) -> int | None:
    if formula_only or d.order > max_order:
        return None
    return diameter(d, max_order)


def verify_table1(max_order: int = DEFAULT_MAX_BFS_ORDER) -> list[RowResult]:
    results = []
    for row in TABLE1:
        opt = optimal_diameters(row.N)
        got = (opt.lb, opt.d1, opt.d2)
        published = [diameter(parse_digraph(s), max_order) for s in (row.cyclic, row.noncyclic)]
        witnesses = {kind: diameter(d, max_order) for kind, (_, d) in opt.witnesses.items()}
        passed = (got == (row.lb, row.d1, row.d2)
                  and published == [row.d1, row.d2]
                  and witnesses == {"cyclic": row.d1, "noncyclic": row.d2})
        results.append(RowResult(1, f"N={row.N}", passed, "bfs", {
            "lb": opt.lb, "D1": opt.d1, "D2": opt.d2,
            "witness_cyclic": str(opt.witnesses["cyclic"][1]),
            "witness_noncyclic": str(opt.witnesses["noncyclic"][1])}))
    return results


def verify_table2(t_max: int = 8, max_order: int = DEFAULT_MAX_BFS_ORDER,
                  formula_only: bool = False) -> list[RowResult]:
    """Orders and diameters of the base double loops and their 2-extensions.

    The published columns are order and diameter; tightness ``k`` is
    reported alongside but does not decide the row.
    """
    results = []
    for i in (1, 2, 3):
        base_d, ext_d = TABLE2_DIAMETERS[i]
        for t in range(1, t_max + 1):
            row = table2_family(i, t)
            measured = [row.base_report.diameter, row.extension_report.diameter]
            method = "mdd"
            bfs = [_bfs_or_none(d, max_order, formula_only) for d in (row.base, row.extension)]
            if None not in bfs:
                method = "bfs"
                measured = bfs
            passed = (row.extension.order == TABLE2_ORDERS[i](t)
                      and measured == [base_d(t), ext_d(t)])
            results.append(RowResult(2, f"row={i} t={t}", passed, method, {
                "order": row.extension.order, "D": measured[1],
                "k": measured[1] - lower_bound_diameter(row.extension.order),
                "base_D": measured[0]}))
    return results


def _formula_chain(row: ImprovementRow, d: CayleyDigraph2) -> tuple[bool, dict]:
    """Certify ``D(d) = lb + T'`` through the ``m``-quotient of ``d``.

    A diagram of the quotient with the predicted diameter, scaled back by
    ``m``, must pass the congruences for ``d`` itself.
    """
    from .digraph import congruence_mdds

    target = lower_bound_diameter(row.N) + row.T_improved
    q = quotient(d, row.m)
    if (target + 2) % row.m:
        return False, {"reason": f"{row.m} does not divide D + 2"}
    q_bound = (target + 2) // row.m - 2
    found = congruence_mdds(q, q_bound)
    if not found:
        return False, {"reason": "no quotient diagram within bound"}
    H = found[0]
    L = scale(H, row.m)
    ok = is_mdd_for(L, d) and extended_diameter(lshape_diameter(H), row.m) == lshape_diameter(L)
    return ok and lshape_diameter(L) == target, {"D": lshape_diameter(L), "mdd": str(L)}


def verify_table3(max_order: int = 100_000, formula_only: bool = False,
                  run_search: bool = True) -> list[RowResult]:
    """Published improved digraphs reach ``lb + T'``; the search matches or beats it.

    Rows above ``max_order`` need ``formula_only`` and are certified by the
    quotient-diagram chain; otherwise they are reported as skipped.
    """
    results = []
    for row in TABLE3:
        d = parse_digraph(row.improved)
        lb = lower_bound_diameter(row.N)
        details = {"N": row.N, "lb": lb, "T'": row.T_improved}
        if d.order != row.N:
            results.append(RowResult(3, f"N={row.N}", False, "-", {**details, "reason": "order"}))
            continue
        if d.order <= max_order and not formula_only:
            D = diameter(d, max_order)
            passed, method = D == lb + row.T_improved, "bfs"
            details["D"] = D
        elif formula_only:
            passed, extra = _formula_chain(row, d)
            method = "mdd"
            details.update(extra)
        else:
            results.append(RowResult(3, f"N={row.N}", None, "skipped",
                                     {**details, "reason": f"order above {max_order}; use --formula-only"}))
            continue
        if row.original is not None and passed:
            orig = parse_digraph(row.original)
            rep = certify_diameter(orig, max_order=max_order, formula_only=formula_only,
                                   hint=lb + row.T)
            details["T"] = rep.k
            passed = rep.k == row.T
        if run_search and passed:
            rec = qe_improve(row.N, row.T)
            details["search_T'"] = None if rec is None else rec.improved_report.k
            details["search_m"] = None if rec is None else rec.m
            passed = rec is not None and rec.improved_report.k <= row.T_improved
        results.append(RowResult(3, f"N={row.N}", passed, method, details))
    return results


def verify_table4(param_max: int = 10, max_order: int = DEFAULT_MAX_BFS_ORDER,
                  formula_only: bool = False) -> list[RowResult]:
    results = []
    for row in TABLE4:
        low = 0 if row.family == "LXZ1odd" else 1
        for p in range(low, param_max + 1):
            rec = table4_family(row.family, p)
            k_orig, k_impr = rec.original_report.k, rec.improved_report.k
            method = "mdd"
            bfs = [_bfs_or_none(d, max_order, formula_only) for d in (rec.original, rec.improved)]
            if None not in bfs:
                lb = lower_bound_diameter(rec.improved.order)
                k_orig, k_impr = bfs[0] - lb, bfs[1] - lb
                method = "bfs"
            passed = (k_orig == row.T and k_impr == row.T_improved and rec.m == row.m)
            results.append(RowResult(4, f"{row.family} {row.param}={p}", passed, method, {
                "N": rec.improved.order, "T": k_orig, "T'": k_impr, "m": rec.m,
                "improved": str(rec.improved)}))
    return results
