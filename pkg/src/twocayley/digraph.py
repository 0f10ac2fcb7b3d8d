"""2-Cayley digraphs over ``Z_s1 + Z_s2``, a BFS distance oracle, and the
congruence test that decides whether an L-shape is a minimum distance
diagram of a given digraph.

Elements are residue pairs ``(x, y)``; flat arrays index them by
``x * s2 + y``.  Since Cayley digraphs are vertex-transitive, the
eccentricity of ``0`` is the diameter.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .intmath import square_divisors
from .lshape import LShape, enumerate_lshapes, is_admissible

#: BFS refuses orders above this unless told otherwise.
DEFAULT_MAX_BFS_ORDER = 20_000_000


class DegenerateDigraphError(ValueError):
    """Generators coincide or one of them is the identity."""


class NotGeneratingError(ValueError):
    """The two generators do not generate the whole group."""


class OrderTooLargeError(ValueError):
    """BFS was asked to handle an order above its cap."""


class Element(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class AbelianGroup2:
    """``Z_s1 + Z_s2`` with ``s1 | s2``."""

    s1: int
    s2: int

    def __post_init__(self):
        if self.s1 < 1 or self.s2 < 1:
            raise ValueError(f"group moduli must be positive: {self.s1}, {self.s2}")
        if self.s2 % self.s1:
            raise ValueError(f"need s1 | s2, got Z_{self.s1} + Z_{self.s2}")

    def __str__(self):
        return f"Z_{self.s1}+Z_{self.s2}"

    @property
    def order(self) -> int:
        return self.s1 * self.s2

    @property
    def is_cyclic(self) -> bool:
        return self.s1 == 1

    def reduce(self, g: Sequence[int]) -> Element:
        return Element(g[0] % self.s1, g[1] % self.s2)

    def add(self, g: Sequence[int], h: Sequence[int]) -> Element:
        return self.reduce((g[0] + h[0], g[1] + h[1]))

    def mul(self, k: int, g: Sequence[int]) -> Element:
        return self.reduce((k * g[0], k * g[1]))

    def index(self, g: Sequence[int]) -> int:
        x, y = self.reduce(g)
        return x * self.s2 + y

    def element(self, index: int) -> Element:
        return Element(*divmod(index, self.s2))

    def element_order(self, g: Sequence[int]) -> int:
        x, y = self.reduce(g)
        return math.lcm(self.s1 // math.gcd(x, self.s1), self.s2 // math.gcd(y, self.s2))


def canonicalize_group(m: int, n: int) -> tuple[AbelianGroup2, Callable[[Sequence[int]], Element]]:
    """Put ``Z_m + Z_n`` in ``Z_gcd + Z_lcm`` form.

    Returns the canonical group and an isomorphism taking ``(x, y)`` in
    ``Z_m + Z_n`` to the corresponding element.
    """
    if m < 1 or n < 1:
        raise ValueError(f"group moduli must be positive: {m}, {n}")
    from .snf import smith_normal_form

    snf = smith_normal_form(((m, 0), (0, n)))
    group = AbelianGroup2(snf.s1, snf.s2)
    U = snf.U

    def convert(g: Sequence[int]) -> Element:
        return group.reduce((U[0][0] * g[0] + U[0][1] * g[1],
                             U[1][0] * g[0] + U[1][1] * g[1]))

    return group, convert


def canonical_groups(N: int) -> list[AbelianGroup2]:
    """Every Abelian group of order ``N`` that two elements can generate."""
    return [AbelianGroup2(s1, N // s1) for s1 in square_divisors(N)]


def generates(group: AbelianGroup2, a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether ``a`` and ``b`` generate ``group``.

    Uses the gcd of the 2x2 minors of ``[a b s1*e1 s2*e2]``, which is 1
    exactly when those columns span ``Z^2``.
    """
    s1, s2 = group.s1, group.s2
    minors = (a[0] * b[1] - a[1] * b[0], a[1] * s1, a[0] * s2,
              b[1] * s1, b[0] * s2, s1 * s2)
    return math.gcd(*minors) == 1


@dataclass(frozen=True)
class CayleyDigraph2:
    """``Cay(Z_s1 + Z_s2, {a, b})``.

    ``a`` and ``b`` are stored as reduced residues.  ``lifts`` keeps the
    integer pairs the digraph was built from; extensions re-reduce those
    rather than the residues, since reduction mod ``s1 = 1`` loses the first
    coordinate.
    """

    group: AbelianGroup2
    a: Element
    b: Element
    lifts: tuple[tuple[int, int], tuple[int, int]] = field(
        default=None, compare=False, repr=False)

    def __post_init__(self):
        lifts = self.lifts or ((int(self.a[0]), int(self.a[1])), (int(self.b[0]), int(self.b[1])))
        object.__setattr__(self, "lifts", lifts)
        a, b = self.group.reduce(self.a), self.group.reduce(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if a == (0, 0) or b == (0, 0):
            raise DegenerateDigraphError(f"zero generator in {self}")
        if a == b:
            raise DegenerateDigraphError(f"equal generators in {self}")

    def __str__(self):
        g = self.group
        if g.is_cyclic:
            return f"Cay(Z_{g.s2}, {{{self.a.y}, {self.b.y}}})"
        return f"Cay({g}, {{({self.a.x},{self.a.y}), ({self.b.x},{self.b.y})}})"

    @classmethod
    def cyclic(cls, N: int, a: int, b: int) -> CayleyDigraph2:
        return cls(AbelianGroup2(1, N), (0, a), (0, b))

    @classmethod
    def over(cls, m: int, n: int, a: Sequence[int], b: Sequence[int]) -> CayleyDigraph2:
        """Build over ``Z_m + Z_n`` for any ``m, n``, canonicalising if needed."""
        if n % m == 0:
            return cls(AbelianGroup2(m, n), tuple(a), tuple(b))
        group, convert = canonicalize_group(m, n)
        return cls(group, convert(a), convert(b))

    @property
    def order(self) -> int:
        return self.group.order

    def generates(self) -> bool:
        return generates(self.group, self.a, self.b)


def bfs_distances(d: CayleyDigraph2, max_order: int | None = None) -> np.ndarray:
    """Distances from ``0`` to every element, as a flat ``int32`` array."""
    n = d.order
    cap = DEFAULT_MAX_BFS_ORDER if max_order is None else max_order
    if n > cap:
        raise OrderTooLargeError(
            f"order {n} exceeds BFS cap {cap}; use formula-based verification")
    s1, s2 = d.group.s1, d.group.s2
    (a1, a2), (b1, b2) = d.a, d.b
    dist = np.full(n, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.zeros(1, dtype=np.int64)
    reached, level = 1, 0
    while frontier.size:
        level += 1
        x, y = np.divmod(frontier, s2)
        nxt = np.concatenate([((x + a1) % s1) * s2 + (y + a2) % s2,
                              ((x + b1) % s1) * s2 + (y + b2) % s2])
        nxt = np.unique(nxt[dist[nxt] < 0])
        dist[nxt] = level
        reached += nxt.size
        frontier = nxt
    if reached < n:
        raise NotGeneratingError(f"{d} reaches only {reached} of {n} vertices")
    return dist


def diameter(d: CayleyDigraph2, max_order: int | None = None) -> int:
    return int(bfs_distances(d, max_order).max())


def is_mdd_for(L: LShape, d: CayleyDigraph2) -> bool:
    """Congruence characterisation: area equals the order, ``l*a = y*b``,
    ``h*b = w*a`` and ``(l - y)(h - w) >= 0`` with the factors not both zero."""
    g = d.group
    return (L.area == g.order
            and is_admissible(L)
            and g.mul(L.l, d.a) == g.mul(L.y, d.b)
            and g.mul(L.h, d.b) == g.mul(L.w, d.a))


def find_mdds(d: CayleyDigraph2, max_order: int | None = None) -> list[LShape]:
    """All minimum distance diagrams of ``d``, lexicographically ordered.

    Candidates are every admissible L-shape of the right area whose diameter
    does not exceed the BFS diameter; the congruences do the filtering.
    """
    D = diameter(d, max_order)
    found = [L for L in enumerate_lshapes(d.order, D) if is_mdd_for(L, d)]
    if not found:
        raise RuntimeError(f"no minimum distance diagram found for {d}")
    return found


def _multiple_positions(d: CayleyDigraph2) -> tuple[np.ndarray, int]:
    """Map each element index to the least ``i >= 0`` with ``i*a`` equal to
    it (``-1`` off the cyclic subgroup), plus the order of ``a``."""
    g = d.group
    oa = g.element_order(d.a)
    i = np.arange(oa, dtype=np.int64)
    idx = (i * d.a.x % g.s1) * g.s2 + (i * d.a.y % g.s2)
    pos = np.full(g.order, -1, dtype=np.int64)
    pos[idx] = i
    return pos, oa


def congruence_mdds(d: CayleyDigraph2, max_diameter: int) -> list[LShape]:
    """Every L-shape of diameter ``<= max_diameter`` passing :func:`is_mdd_for`.

    Same answer as filtering ``enumerate_lshapes(order, max_diameter)``, but
    built from the lattice points ``(l, -y)`` and ``(-w, h)`` of the kernel,
    which costs ``O(order + max_diameter)`` and needs no BFS.
    """
    g = d.group
    n = g.order
    D = max_diameter
    pos, oa = _multiple_positions(d)
    us, vs = [], []
    for j in range(D + 2):
        i0 = int(pos[g.index(g.mul(j, d.b))])
        if i0 < 0:
            continue
        if j <= D:
            # (i, -j) in the kernel: candidate (l, y) = (i, j)
            us.extend((i, j) for i in range(i0 or oa, D + 2, oa))
        if j >= 1:
            # (-i, j) in the kernel: candidate (w, h) = (i, j)
            vs.extend((i, j) for i in range(i0, D + 1, oa))
    found = []
    for l, y in us:
        for w, h in vs:
            if w < l and y < h and l * h - w * y == n:
                f1, f2 = l - y, h - w
                if f1 * f2 >= 0 and (f1 or f2) and l + h - min(w, y) - 2 <= D:
                    found.append(LShape(l, h, w, y))
    return sorted(found)


def formula_diameter(d: CayleyDigraph2, max_diameter: int) -> tuple[int, LShape] | None:
    """Diameter certified by a congruence-checked diagram, without BFS.

    Returns ``(diameter, L)`` for the lexicographically first diagram found
    with diameter ``<= max_diameter``, or ``None`` if there is none (the
    diameter then exceeds the bound).
    """
    if not d.generates():
        raise NotGeneratingError(f"{d} does not generate its group")
    found = congruence_mdds(d, max_diameter)
    if not found:
        return None
    L = found[0]
    return L.l + L.h - min(L.w, L.y) - 2, L


def parse_digraph(text: str) -> CayleyDigraph2:
    """Parse ``"N;a;b"`` (cyclic) or ``"s1,s2;a1,a2;b1,b2"``.

    Negative coordinates are allowed and reduced; ``Z_s1 + Z_s2`` without
    ``s1 | s2`` is converted to canonical form.
    """
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 3:
        raise ValueError(f"digraph text needs three ';'-separated fields: {text!r}")
    try:
        fields = [tuple(int(x) for x in p.split(",")) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer entry in digraph text {text!r}") from None
    group, a, b = fields
    if len(group) == 1 and len(a) == 1 and len(b) == 1:
        return CayleyDigraph2.cyclic(group[0], a[0], b[0])
    if len(group) == 2 and len(a) == 2 and len(b) == 2:
        return CayleyDigraph2.over(group[0], group[1], a, b)
    raise ValueError(f"digraph text mixes cyclic and two-coordinate fields: {text!r}")
