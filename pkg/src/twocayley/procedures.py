"""Extensions and quotients of 2-Cayley digraphs, and when extensions stay tight.

The ``m``-extension of ``Cay(Z_s1 + Z_s2, {a, b})`` keeps the generator
tuples and multiplies both moduli by ``m``; its diagrams are the related
diagrams scaled by ``m``.  The ``m``-quotient (for ``m | s1``) divides both
moduli.  An extension of a tight digraph of order ``N`` is tight exactly
for ``m <= c(N)``, the extension coefficient, which is finite unless
``N = 3 t**2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import AbelianGroup2, CayleyDigraph2, generates
from .intmath import ceil_sqrt, is_square, isqrt, lower_bound_diameter


@dataclass(frozen=True)
class TightnessReport:
    order: int
    lower_bound: int
    diameter: int
    k: int
    method: str = "formula"

    def __post_init__(self):
        if self.k != self.diameter - self.lower_bound or self.k < 0:
            raise ValueError(f"inconsistent tightness report {self}")

    @classmethod
    def of(cls, order: int, diameter: int, method: str = "formula") -> TightnessReport:
        lb = lower_bound_diameter(order)
        return cls(order, lb, diameter, diameter - lb, method)

    @property
    def tight(self) -> bool:
        return self.k == 0


def _shifts(m: int):
    """All ``(i, j, k, l)`` in ``range(m)**4`` by increasing sum."""
    for total in range(4 * (m - 1) + 1):
        for i in range(min(total, m - 1) + 1):
            for j in range(min(total - i, m - 1) + 1):
                for k in range(min(total - i - j, m - 1) + 1):
                    l = total - i - j - k
                    if l < m:
                        yield i, j, k, l


def _lifted_generators(d: CayleyDigraph2, group: AbelianGroup2):
    """Integer lifts of ``d``'s generators that generate ``group``.

    Any lift works for the diagram congruences, so the stored lifts are
    tried first and then lifts shifted by multiples of ``(s1, s2)``.
    """
    (a, b) = d.lifts
    if generates(group, a, b):
        return a, b
    s1, s2 = d.group.s1, d.group.s2
    ra, rb = d.a, d.b
    for i, j, k, l in _shifts(group.s1 // s1):
        a = (ra.x + i * s1, ra.y + j * s2)
        b = (rb.x + k * s1, rb.y + l * s2)
        if generates(group, a, b):
            return a, b
    raise ValueError(f"no generating lift of {d} into {group}")


def extend(d: CayleyDigraph2, m: int) -> CayleyDigraph2:
    """The ``m``-extension over ``Z_{m s1} + Z_{m s2}``."""
    if m < 1:
        raise ValueError(f"extension factor must be >= 1, got {m}")
    if m == 1:
        return d
    group = AbelianGroup2(m * d.group.s1, m * d.group.s2)
    a, b = _lifted_generators(d, group)
    return CayleyDigraph2(group, a, b, lifts=(a, b))


def quotient(d: CayleyDigraph2, m: int) -> CayleyDigraph2:
    """The ``m``-quotient over ``Z_{s1/m} + Z_{s2/m}``; needs ``m | s1``."""
    if m < 1 or d.group.s1 % m:
        raise ValueError(f"quotient factor {m} must divide s1 = {d.group.s1}")
    group = AbelianGroup2(d.group.s1 // m, d.group.s2 // m)
    a, b = d.lifts
    return CayleyDigraph2(group, a, b, lifts=(a, b))


def extended_diameter(diameter: int, m: int) -> int:
    return m * (diameter + 2) - 2


def quotient_diameter(diameter: int, m: int) -> int:
    if (diameter + 2) % m:
        raise ValueError(f"{m} does not divide diameter + 2 = {diameter + 2}")
    return (diameter + 2) // m - 2


def is_tight_extension(N: int, m: int) -> bool:
    """``m * ceil(sqrt(3N)) == ceil(m * sqrt(3N))``, in integers."""
    return m * ceil_sqrt(3 * N) == ceil_sqrt(3 * N * m * m)


def has_infinite_tight_extensions(N: int) -> bool:
    """True iff ``N = 3 t**2``."""
    if N < 1:
        raise ValueError(f"order must be positive, got {N}")
    return N % 3 == 0 and is_square(N // 3)


def interval_ceil(N: int) -> tuple[int, int, int]:
    """Locate ``N`` in ``[3t^2+1, 3(t+1)^2]`` and its third ``i``.

    Returns ``(t, i, ceil(sqrt(3N)))`` where the ceiling is ``3t + i``.
    """
    if N < 1:
        raise ValueError(f"order must be positive, got {N}")
    t = isqrt((N - 1) // 3)
    if N <= 3 * t * t + 2 * t:
        i = 1
    elif N <= 3 * t * t + 4 * t + 1:
        i = 2
    else:
        i = 3
    return t, i, 3 * t + i


def max_coefficient(t: int, i: int) -> tuple[int, int]:
    """The unique maximiser ``N_{t,i}`` of the coefficient on the ``i``-th
    third of ``[3t^2+1, 3(t+1)^2]`` and the maximum value ``E_{t,i}``."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    table = {
        1: (3 * t * t + 2 * t, 6 * t + 1),
        2: (3 * t * t + 4 * t + 1, 6 * t + 3),
        3: (3 * t * t + 6 * t + 2, 2 * t + 1),
    }
    if i not in table:
        raise ValueError(f"interval index must be 1, 2 or 3, got {i}")
    return table[i]


def extension_coefficient_closed_form(N: int) -> int:
    """``floor(1 / (ceil(sqrt(3N)) - sqrt(3N)))`` in exact arithmetic.

    With ``c = ceil(sqrt(3N))`` and ``q = c^2 - 3N > 0`` the quantity is
    ``floor((c + sqrt(3N)) / q)``, and the irrational part may be floored
    first because ``q`` is an integer.
    """
    if has_infinite_tight_extensions(N):
        raise ValueError(f"N = {N} = 3t^2 has infinitely many tight extensions")
    c = ceil_sqrt(3 * N)
    return (c + isqrt(3 * N)) // (c * c - 3 * N)


def extension_coefficient(N: int) -> int:
    """Largest ``m`` for which the ``m``-extension of a tight order-``N``
    digraph is tight.

    Scans ``m = 1, 2, ...`` with :func:`is_tight_extension` (tight values
    form an initial segment) and checks the result against the closed form.
    The scan never needs to pass ``6t + 3`` for ``N`` in ``[3t^2+1, 3(t+1)^2]``.
    """
    if has_infinite_tight_extensions(N):
        raise ValueError(f"N = {N} = 3t^2 has infinitely many tight extensions")
    t, _, _ = interval_ceil(N)
    bound = 6 * t + 3
    m = 1
    while is_tight_extension(N, m + 1):
        m += 1
        if m > bound:
            raise ArithmeticError(f"c({N}) scan passed the bound {bound}")
    closed = extension_coefficient_closed_form(N)
    if m != closed:
        raise ArithmeticError(f"c({N}): scan gives {m}, closed form {closed}")
    return m


def coefficient_table(n_max: int, n_min: int = 4) -> list[tuple[int, int]]:
    """``(N, c(N))`` for ``n_min <= N <= n_max``, skipping ``N = 3t^2``."""
    return [(N, extension_coefficient(N)) for N in range(max(n_min, 1), n_max + 1)
            if not has_infinite_tight_extensions(N)]


def certify_diameter(d: CayleyDigraph2, *, max_order: int | None = None,
                     formula_only: bool = False, hint: int | None = None) -> TightnessReport:
    """Diameter of ``d`` with the way it was established.

    BFS (method ``"bfs"``) unless ``formula_only``; otherwise a
    congruence-checked diagram (method ``"mdd"``), searched with a diameter
    bound that starts at ``hint`` (default ``lb``) and doubles its slack
    until a diagram turns up.  Orders above the BFS cap raise
    :class:`~twocayley.digraph.OrderTooLargeError` unless ``formula_only``.
    """
    from .digraph import diameter, formula_diameter

    if not formula_only:
        return TightnessReport.of(d.order, diameter(d, max_order), "bfs")
    lb = lower_bound_diameter(d.order)
    bound = max(lb, hint if hint is not None else lb)
    while True:
        found = formula_diameter(d, bound)
        if found is not None:
            return TightnessReport.of(d.order, found[0], "mdd")
        if bound >= d.order:
            raise ArithmeticError(f"no diagram found for {d}")
        bound = min(d.order, lb + 2 * (bound - lb) + 1)
