"""Optimal diameters of 2-Cayley digraphs and the quotient-extension improvement.

``optimal_diameters`` searches L-shapes rather than digraphs: every digraph
has a diagram with the same diameter and every admissible, non-degenerate
diagram comes from a digraph, with ``gcd(l, h, w, y) = 1`` exactly for the
cyclic ones.  ``brute_oracle`` checks that equivalence by BFS over all
digraphs of small order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .census import census
from .digraph import CayleyDigraph2
from .intmath import is_square_free, lower_bound_diameter, square_divisors
from .lshape import LShape, diameter, enumerate_lshapes, has_degenerate_generators, scale
from .procedures import TightnessReport, extend, extended_diameter
from .snf import digraph_of

BRUTE_ORACLE_MAX_ORDER = 300


@dataclass
class OptimalityResult:
    N: int
    lb: int
    d1: int | None
    d2: int | None
    d3: int
    witnesses: dict[str, tuple[LShape, CayleyDigraph2]] = field(default_factory=dict)

    def __post_init__(self):
        defined = [d for d in (self.d1, self.d2) if d is not None]
        if self.d3 != min(defined) or self.d3 < self.lb:
            raise ValueError(f"inconsistent optimality result {self}")


@dataclass
class ImprovementRecord:
    """Before/after record for one quotient-extension improvement.

    ``base`` is the diagram of area ``intermediate_area = N / m^2`` whose
    ``m``-extension gives ``improved``.
    """

    original: CayleyDigraph2 | None
    original_report: TightnessReport
    m: int
    intermediate_area: int
    base: LShape
    improved: CayleyDigraph2
    improved_report: TightnessReport

    def __post_init__(self):
        if self.improved_report.diameter >= self.original_report.diameter:
            raise ValueError("improvement does not lower the diameter")
        if self.improved_report.order != self.original_report.order:
            raise ValueError("improvement changed the order")

    @property
    def improved_mdd(self) -> LShape:
        return scale(self.base, self.m)


def _class_minima(N: int, bound: int) -> dict[str, tuple[int, LShape]]:
    best: dict[str, tuple[int, LShape]] = {}
    for L in enumerate_lshapes(N, bound):
        if has_degenerate_generators(L):
            continue
        kind = "cyclic" if L.gcd == 1 else "noncyclic"
        d = diameter(L)
        if kind not in best or d < best[kind][0]:
            best[kind] = (d, L)
    return best


def optimal_diameters(N: int) -> OptimalityResult:
    """Minimum diameters over cyclic (``d1``) and non-cyclic (``d2``) groups.

    ``d2`` is ``None`` for square-free ``N``.  Witnesses are the
    lexicographically smallest optimal diagram of each class together with
    the digraph recovered from it.
    """
    if N < 3:
        raise ValueError(f"optimal diameters are defined for N >= 3, got {N}")
    lb = lower_bound_diameter(N)
    want = {"cyclic"} if is_square_free(N) else {"cyclic", "noncyclic"}
    slack = 2
    while True:
        bound = min(lb + slack, N)
        best = _class_minima(N, bound)
        if want <= best.keys() or bound == N:
            break
        slack *= 2
    d1 = best["cyclic"][0]
    d2 = best["noncyclic"][0] if "noncyclic" in want else None
    witnesses = {kind: (L, digraph_of(L)) for kind, (_, L) in best.items() if kind in want}
    d3 = d1 if d2 is None else min(d1, d2)
    return OptimalityResult(N, lb, d1, d2, d3, witnesses)


def brute_oracle(N: int, max_order: int = BRUTE_ORACLE_MAX_ORDER) -> tuple[int, int | None]:
    """``(d1, d2)`` by BFS over every generating pair of every group of order ``N``."""
    if N > max_order:
        raise ValueError(f"brute oracle capped at order {max_order}, got {N}")
    d1 = d2 = None
    for gc in census(N, with_mdds=False):
        dmin = gc.min_diameter()
        if dmin is None:
            continue
        if gc.group.is_cyclic:
            d1 = dmin
        else:
            d2 = dmin if d2 is None else min(d2, dmin)
    return d1, d2


def qe_improve(N: int, k: int, current_diameter: int | None = None) -> ImprovementRecord | None:
    """Look for a digraph of order ``N`` beating a ``k``-tight one.

    For every ``m >= 2`` with ``m^2 | N`` the diagrams of area ``N / m^2``
    with ``m (d + 2) < lb(N) + k + 2`` are searched; the best resulting
    diameter wins, ties going to the larger ``m`` and then to the
    lexicographically smaller diagram.  Returns ``None`` when nothing beats
    the current diameter (always the case for square-free ``N``).
    """
    lb = lower_bound_diameter(N)
    current = lb + k
    if current_diameter is not None and current_diameter != current:
        raise ValueError(f"current diameter {current_diameter} is not lb({N}) + {k} = {current}")
    best: tuple[int, int, LShape] | None = None
    for m in reversed(square_divisors(N)):
        if m == 1:
            continue
        Np = N // (m * m)
        # m (d + 2) < current + 2
        bound = (current + 1) // m - 2
        if bound < lower_bound_diameter(Np):
            continue
        for L in enumerate_lshapes(Np, bound):
            if Np >= 3 and has_degenerate_generators(L):
                continue
            improved = extended_diameter(diameter(L), m)
            if best is None or improved < best[0]:
                best = (improved, m, L)
    if best is None:
        return None
    improved_diameter, m, L = best
    Np = N // (m * m)
    if Np >= 3:
        improved = extend(digraph_of(L), m)
    else:
        improved = digraph_of(scale(L, m))
    return ImprovementRecord(
        original=None,
        original_report=TightnessReport.of(N, current, "given"),
        m=m,
        intermediate_area=Np,
        base=L,
        improved=improved,
        improved_report=TightnessReport.of(N, improved_diameter, "formula"),
    )
