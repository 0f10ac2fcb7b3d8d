"""Smith normal form of 2x2 integer matrices and the diagram -> digraph map.

For ``L = L(l, h, w, y)`` the columns of ``M = [[l, -w], [-y, h]]`` span the
kernel lattice of the related digraph.  With ``S = U M V = diag(s1, s2)``
the group is ``Z_s1 + Z_s2`` and the columns of ``U`` are the generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import AbelianGroup2, CayleyDigraph2, DegenerateDigraphError, is_mdd_for
from .lshape import LShape, is_admissible

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))


def matmul(A: Matrix2, B: Matrix2) -> Matrix2:
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def det(M: Matrix2) -> int:
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


@dataclass(frozen=True)
class SnfDecomposition:
    s1: int
    s2: int
    U: Matrix2
    V: Matrix2

    @property
    def S(self) -> Matrix2:
        return ((self.s1, 0), (0, self.s2))

    def check(self, M: Matrix2) -> None:
        """Raise ``AssertionError`` unless every defining property holds."""
        assert self.s1 > 0 and self.s2 > 0, self
        assert self.s2 % self.s1 == 0, self
        assert self.s1 * self.s2 == abs(det(M)), self
        assert abs(det(self.U)) == 1 and abs(det(self.V)) == 1, self
        assert matmul(matmul(self.U, M), self.V) == self.S, self


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def matrix_of(L: LShape) -> Matrix2:
    return ((L.l, -L.w), (-L.y, L.h))


def smith_normal_form(M: Matrix2) -> SnfDecomposition:
    """Diagonalise ``M`` by Euclidean row/column steps, tracking ``U`` and ``V``."""
    if det(M) == 0:
        raise ValueError(f"singular matrix {M}")
    A = M
    U = V = IDENTITY
    while True:
        a, b = A[0]
        if b:
            # plain elimination when the pivot already divides, so the
            # pivot never grows back and the loop terminates
            if a and b % a == 0:
                C = ((1, -b // a), (0, 1))
            else:
                g, x, y = _ext_gcd(a, b)
                C = ((x, -b // g), (y, a // g))
            A, V = matmul(A, C), matmul(V, C)
        a, c = A[0][0], A[1][0]
        if c:
            if a and c % a == 0:
                R = ((1, 0), (-c // a, 1))
            else:
                g, x, y = _ext_gcd(a, c)
                R = ((x, y), (-c // g, a // g))
            A, U = matmul(R, A), matmul(R, U)
            continue
        if A[0][1]:
            continue
        if A[1][1] % A[0][0] == 0:
            break
        # fold row 1 into row 0 so the next pass takes gcd(s1, s2)
        R = ((1, 1), (0, 1))
        A, U = matmul(R, A), matmul(R, U)
    for col in (0, 1):
        if A[col][col] < 0:
            F = ((-1, 0), (0, 1)) if col == 0 else ((1, 0), (0, -1))
            A, V = matmul(A, F), matmul(V, F)
    snf = SnfDecomposition(A[0][0], A[1][1], U, V)
    snf.check(M)
    return snf


def digraph_of(L: LShape) -> CayleyDigraph2:
    """The digraph over ``Z_s1 + Z_s2`` whose generators are the columns of ``U``."""
    if not is_admissible(L):
        raise ValueError(f"{L} is not admissible")
    snf = smith_normal_form(matrix_of(L))
    U = snf.U
    lift_a, lift_b = (U[0][0], U[1][0]), (U[0][1], U[1][1])
    try:
        d = CayleyDigraph2(AbelianGroup2(snf.s1, snf.s2), lift_a, lift_b)
    except DegenerateDigraphError as exc:
        raise DegenerateDigraphError(f"{L} gives degenerate generators: {exc}") from None
    if not is_mdd_for(L, d):
        raise AssertionError(f"{L} fails the MDD congruences for {d}")
    return d
