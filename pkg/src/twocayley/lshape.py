"""L-shaped minimum distance diagrams ``L(l, h, w, y)``.

An L-shape is an ``l x h`` rectangle with a ``w x y`` notch removed from its
top-right corner.  It tiles the plane through the translations
``u = (l, -y)`` and ``v = (-w, h)``, and the lattice they span is the kernel
of ``(i, j) -> i*a + j*b`` for any digraph ``Cay(G, {a, b})`` it is related to.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .intmath import divisors, gcd_many, isqrt, lower_bound_diameter


class InadmissibleLShape(ValueError):
    """The quadruple fails ``(l - y)(h - w) >= 0`` with non-vanishing factors."""


@dataclass(frozen=True, order=True)
class LShape:
    l: int
    h: int
    w: int
    y: int

    def __post_init__(self):
        for name in ("l", "h", "w", "y"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"L-shape side {name} must be an int")
        if self.l < 1 or self.h < 1:
            raise ValueError(f"{self}: l and h must be positive")
        if not (0 <= self.w < self.l and 0 <= self.y < self.h):
            raise ValueError(f"{self}: need 0 <= w < l and 0 <= y < h")

    def __str__(self):
        return f"L({self.l},{self.h},{self.w},{self.y})"

    @property
    def area(self) -> int:
        return self.l * self.h - self.w * self.y

    @property
    def gcd(self) -> int:
        return gcd_many([self.l, self.h, self.w, self.y])

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.l, self.h, self.w, self.y)


class TessellationVectors(NamedTuple):
    u: tuple[int, int]
    v: tuple[int, int]

    @property
    def determinant(self) -> int:
        return self.u[0] * self.v[1] - self.u[1] * self.v[0]


def area(L: LShape) -> int:
    return L.area


def is_admissible(L: LShape) -> bool:
    f1, f2 = L.l - L.y, L.h - L.w
    return f1 * f2 >= 0 and not (f1 == 0 and f2 == 0)


def _require_admissible(L: LShape) -> None:
    if not is_admissible(L):
        raise InadmissibleLShape(f"{L} is not admissible: (l-y)(h-w) = "
                                 f"{(L.l - L.y) * (L.h - L.w)}")


def diameter(L: LShape) -> int:
    """``l + h - min(w, y) - 2``: the largest ``i + j`` over cells of ``L``."""
    _require_admissible(L)
    return L.l + L.h - min(L.w, L.y) - 2


def corner_distances(L: LShape) -> tuple[int, int]:
    """Distances of the two extreme cells ``p = [l-1, h-y-1]`` and
    ``q = [l-w-1, h-1]``; the diameter is the larger one."""
    _require_admissible(L)
    return (L.l + L.h - L.y - 2, L.l + L.h - L.w - 2)


def tightness(L: LShape) -> int:
    return diameter(L) - lower_bound_diameter(L.area)


def scale(L: LShape, m: int) -> LShape:
    if m < 1:
        raise ValueError(f"scale factor must be >= 1, got {m}")
    _require_admissible(L)
    return LShape(m * L.l, m * L.h, m * L.w, m * L.y)


def divide(L: LShape, m: int) -> LShape:
    if m < 1:
        raise ValueError(f"divisor must be >= 1, got {m}")
    g = L.gcd
    if g % m:
        raise ValueError(f"{m} does not divide gcd{L.as_tuple()} = {g}")
    _require_admissible(L)
    return LShape(L.l // m, L.h // m, L.w // m, L.y // m)


def tessellation_vectors(L: LShape) -> TessellationVectors:
    return TessellationVectors((L.l, -L.y), (-L.w, L.h))


def lattice_contains(L: LShape, i: int, j: int) -> bool:
    """Whether ``(i, j)`` lies in the lattice spanned by ``u`` and ``v``.

    Equivalently, whether ``i*a + j*b = 0`` in every digraph related to ``L``.
    """
    N = L.area
    return (L.h * i + L.w * j) % N == 0 and (L.y * i + L.l * j) % N == 0


def has_degenerate_generators(L: LShape) -> bool:
    """True when a related digraph would have ``a = 0``, ``b = 0`` or ``a = b``."""
    return (lattice_contains(L, 1, 0) or lattice_contains(L, 0, 1)
            or lattice_contains(L, 1, -1))


def _notches(l: int, h: int, p: int, c: int) -> Iterator[tuple[int, int]]:
    """Pairs ``(w, y)`` with ``w*y = p``, ``w < l``, ``y < h`` and
    ``min(w, y) >= c``, in increasing ``w``."""
    if p == 0:
        if c > 0:
            return
        for y in range(h):
            yield 0, y
        for w in range(1, l):
            yield w, 0
        return
    lo = max(1, c, p // h + 1)
    hi = l - 1
    if c > 0:
        hi = min(hi, p // c)
    if lo > hi:
        return
    if hi - lo > 2 * isqrt(p):
        for w in divisors(p):
            if lo <= w <= hi:
                yield w, p // w
    else:
        for w in range(lo, hi + 1):
            if p % w == 0:
                yield w, p // w


def enumerate_lshapes(N: int, max_diameter: int | None = None) -> Iterator[LShape]:
    """Yield every admissible L-shape of area ``N`` (optionally with
    diameter at most ``max_diameter``) in lexicographic ``(l, h, w, y)`` order.

    Sides are bounded by ``l + h <= N + 1`` in general and by
    ``l, h <= max_diameter + 1`` when a diameter bound is given.
    """
    if N < 1:
        raise ValueError(f"area must be positive, got {N}")
    lmax = N
    if max_diameter is not None:
        if max_diameter < 0:
            return
        lmax = min(lmax, max_diameter + 1)
    for l in range(1, lmax + 1):
        hmin = -(-N // l)
        hmax = N + 1 - l
        if max_diameter is not None:
            hmax = min(hmax, max_diameter + 1)
        for h in range(hmin, hmax + 1):
            c = 0 if max_diameter is None else l + h - 2 - max_diameter
            for w, y in _notches(l, h, l * h - N, c):
                f1, f2 = l - y, h - w
                if f1 * f2 >= 0 and (f1 or f2):
                    yield LShape(l, h, w, y)
