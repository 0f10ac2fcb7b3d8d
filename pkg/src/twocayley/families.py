"""Closed-form families of tight and nearly tight 2-Cayley digraphs.

Every constructor builds the digraph from its generator formulas and then
checks the stated diagram against it with the congruence test, so the
returned reports are certified by a diagram (method ``"mdd"``) rather than
taken on trust.  BFS certification is left to the caller.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .digraph import AbelianGroup2, CayleyDigraph2, is_mdd_for
from .intmath import lower_bound_diameter
from .lshape import LShape, diameter
from .procedures import TightnessReport, certify_diameter, extend, max_coefficient
from .search import ImprovementRecord


class FamilyId(enum.Enum):
    InfiniteTight = "InfiniteTight"
    MaxCoeff1 = "MaxCoeff1"
    MaxCoeff2 = "MaxCoeff2"
    MaxCoeff3 = "MaxCoeff3"
    DL1 = "DL1"
    DL2 = "DL2"
    DL3 = "DL3"
    LXZ1odd = "LXZ1odd"
    LXZ1even = "LXZ1even"
    LXZ2 = "LXZ2"
    LXZ3 = "LXZ3"


class FamilyMember(NamedTuple):
    digraph: CayleyDigraph2
    mdd: LShape
    report: TightnessReport


class Table2Row(NamedTuple):
    base: CayleyDigraph2
    base_mdd: LShape
    base_report: TightnessReport
    extension: CayleyDigraph2
    extension_mdd: LShape
    extension_report: TightnessReport


def _certified(d: CayleyDigraph2, L: LShape) -> TightnessReport:
    if not is_mdd_for(L, d):
        raise ArithmeticError(f"{L} is not a minimum distance diagram of {d}")
    return TightnessReport.of(d.order, diameter(L), "mdd")


def _member(group: AbelianGroup2, a, b, L: LShape) -> FamilyMember:
    d = CayleyDigraph2(group, a, b)
    return FamilyMember(d, L, _certified(d, L))


def _require(name: str, value: int, low: int) -> None:
    if value < low:
        raise ValueError(f"{name} must be >= {low}, got {value}")


def gamma_infinite(t: int) -> FamilyMember:
    """``Cay(Z_t + Z_3t, {(1, -1), (0, 1)})``: order ``3t^2``, diameter ``3t - 2``."""
    _require("t", t, 1)
    return _member(AbelianGroup2(t, 3 * t), (1, -1), (0, 1), LShape(2 * t, 2 * t, t, t))


def _max_coeff_data(t: int, i: int):
    N, _ = max_coefficient(t, i)
    lifts = {1: ((1, t), (2, 2 * t + 1)), 2: ((1, t), (2, 2 * t + 1)), 3: ((2, 2 * t + 1), (1, t))}[i]
    L = {1: LShape(2 * t + 1, 2 * t, t, t),
         2: LShape(2 * t + 1, 2 * t + 1, t, t),
         3: LShape(2 * t + 2, 2 * t + 1, t, t)}[i]
    return N, lifts, L


def gamma_max_coeff(t: int, i: int) -> FamilyMember:
    """The cyclic tight digraph of order ``N_{t,i}``, where the extension
    coefficient peaks on the ``i``-th third of ``[3t^2+1, 3(t+1)^2]``."""
    _require("t", t, 1)
    N, (a, b), L = _max_coeff_data(t, i)
    return _member(AbelianGroup2(1, N), a, b, L)


def extended_family(t: int, i: int, m: int) -> CayleyDigraph2:
    """``m``-extension of :func:`gamma_max_coeff`, tight for ``2 <= m <= E_{t,i}``."""
    _require("t", t, 1)
    N, (a, b), _ = _max_coeff_data(t, i)
    _, E = max_coefficient(t, i)
    if not 2 <= m <= E:
        raise ValueError(f"m = {m} outside the tight range 2..{E} for t = {t}, i = {i}")
    return CayleyDigraph2(AbelianGroup2(m, m * N), a, b)


def _table2_data(i: int, t: int):
    if i == 1:
        N = 12 * t * t + 1
        lifts = ((3 * t, -6 * t + 1), (-1, 2))
        L = LShape(4 * t, 4 * t, 2 * t - 1, 2 * t + 1)
    elif i == 2:
        N = 3 * t * t + 2 * t + 1
        lifts = ((1, -3 * t), (0, 1))
        L = LShape(2, 3, 1, 0) if t == 1 else LShape(2 * t + 1, 2 * t + 1, t, t + 2)
    elif i == 3:
        N = 3 * t * t + 4 * t + 2
        lifts = ((1, -3 * t - 2), (0, 1))
        L = LShape(2 * t + 1, 2 * t + 2, t, t + 2)
    else:
        raise ValueError(f"row index must be 1, 2 or 3, got {i}")
    return N, lifts, L


def table2_family(i: int, t: int) -> Table2Row:
    """A double-loop network and its 2-extension over ``Z_2 + Z_2N``."""
    _require("t", t, 1)
    N, (a, b), L = _table2_data(i, t)
    base = CayleyDigraph2(AbelianGroup2(1, N), a, b)
    ext = extend(base, 2)
    if ext != CayleyDigraph2(AbelianGroup2(2, 2 * N), a, b):
        raise ArithmeticError(f"extension of {base} is not over the printed generators")
    L2 = LShape(2 * L.l, 2 * L.h, 2 * L.w, 2 * L.y)
    return Table2Row(base, L, _certified(base, L), ext, L2, _certified(ext, L2))


def _lxz_original(N: int, b: int, hint: int) -> tuple[CayleyDigraph2, TightnessReport]:
    d = CayleyDigraph2.cyclic(N, 1, b)
    return d, certify_diameter(d, formula_only=True, hint=hint)


def table4_family(family: FamilyId | str, param: int) -> ImprovementRecord:
    """Quotient-extension improvement of one symbolic family.

    ``param`` is ``lambda`` for ``LXZ1odd`` (``e = 2 lambda + 1``) and
    ``LXZ1even`` (``e = 2 lambda``), ``e`` for ``LXZ2`` and ``t`` for ``LXZ3``.
    """
    family = FamilyId(family)
    if family is FamilyId.LXZ1odd or family is FamilyId.LXZ1even:
        odd = family is FamilyId.LXZ1odd
        lam = param
        _require("lambda", lam, 0 if odd else 1)
        e = 2 * lam + 1 if odd else 2 * lam
        t = 2 * e + 5
        Np = 3 * e * e + 16 * e + 20
        base_L = LShape(2 * e + 6, 2 * e + 4, e + 2, e + 2)
        if odd:
            base = CayleyDigraph2(AbelianGroup2(1, Np), (1, -6 * lam * lam - 25 * lam - 24), (0, 1))
        else:
            base = CayleyDigraph2(AbelianGroup2(2, Np // 2), (1, -lam - 1), (-1, lam + 2))
        m = 2
        original, original_report = _lxz_original(3 * t * t + 2 * t - 5, 3 * t - 2,
                                                  lower_bound_diameter(4 * Np) + 1)
    elif family is FamilyId.LXZ2:
        e = param
        _require("e", e, 1)
        t = 2 * e
        Np = 3 * e * e + 2 * e
        base_L = LShape(2 * e + 1, 2 * e + 1, e + 1, e + 1)
        base = CayleyDigraph2(AbelianGroup2(1, Np), (1, 3 * e + 1), (0, 1))
        m = 2
        original, original_report = _lxz_original(3 * t * t + 4 * t, 6 * e,
                                                  lower_bound_diameter(4 * Np) + 1)
    elif family is FamilyId.LXZ3:
        t = param
        _require("t", t, 1)
        member = gamma_infinite(t + 1)
        base, base_L, m, Np = member.digraph, member.mdd, 1, member.digraph.order
        original, original_report = _lxz_original(3 * t * t + 6 * t + 3, 3 * t + 5,
                                                  lower_bound_diameter(Np) + 1)
    else:
        raise ValueError(f"{family.value} is not a symbolic improvement family")
    _certified(base, base_L)
    improved = extend(base, m)
    improved_L = LShape(m * base_L.l, m * base_L.h, m * base_L.w, m * base_L.y)
    return ImprovementRecord(
        original=original,
        original_report=original_report,
        m=m,
        intermediate_area=Np,
        base=base_L,
        improved=improved,
        improved_report=_certified(improved, improved_L),
    )


def family_member(family: FamilyId | str, t: int) -> FamilyMember:
    """Uniform access to the single-parameter families by id."""
    family = FamilyId(family)
    if family is FamilyId.InfiniteTight:
        return gamma_infinite(t)
    if family.value.startswith("MaxCoeff"):
        return gamma_max_coeff(t, int(family.value[-1]))
    if family.value.startswith("DL"):
        row = table2_family(int(family.value[-1]), t)
        return FamilyMember(row.extension, row.extension_mdd, row.extension_report)
    raise ValueError(f"{family.value} is an improvement family; use table4_family")


def ac_bound(k: int) -> int:
    """Largest possible order of a 2-Cayley digraph of diameter ``k``."""
    if k < 0:
        raise ValueError(f"diameter must be non-negative, got {k}")
    return (k + 2) ** 2 // 3
