"""Exhaustive census of every 2-Cayley digraph of a given order.

For each canonical group ``Z_s1 + Z_s2`` and each unordered pair of distinct
non-zero elements the compiled kernel runs a queue BFS from ``0`` and, when
the pair generates, counts the L-shapes passing the congruence test with
diameter at most the BFS diameter.  This is the small-order ground truth
behind the brute-force optimum and the diagram soundness checks; the
per-digraph Python paths in :mod:`twocayley.digraph` are cross-checked
against it in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .digraph import AbelianGroup2, CayleyDigraph2, canonical_groups


@numba.njit(cache=True)
def _census_kernel(s1, s2, with_mdds):
    n = s1 * s2
    trans = np.empty((n, n), dtype=np.int32)
    for g in range(n):
        gx, gy = g // s2, g % s2
        for v in range(n):
            vx, vy = v // s2, v % s2
            trans[g, v] = ((vx + gx) % s1) * s2 + (vy + gy) % s2

    npairs = (n - 1) * (n - 2) // 2
    out_a = np.empty(npairs, dtype=np.int32)
    out_b = np.empty(npairs, dtype=np.int32)
    out_d = np.full(npairs, -1, dtype=np.int32)
    out_count = np.zeros(npairs, dtype=np.int32)
    out_bad = np.zeros(npairs, dtype=np.int32)

    dist = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    pos = np.empty(n, dtype=np.int32)
    cap = n * n + 2 * n + 4
    ul = np.empty(cap, dtype=np.int32)
    uy = np.empty(cap, dtype=np.int32)
    vw = np.empty(cap, dtype=np.int32)
    vh = np.empty(cap, dtype=np.int32)

    k = 0
    for a in range(1, n):
        # pos[g] = least i >= 0 with i*a = g, or -1
        pos[:] = -1
        g = 0
        oa = 0
        while pos[g] < 0:
            pos[g] = oa
            g = trans[a, g]
            oa += 1
        for b in range(a + 1, n):
            out_a[k] = a
            out_b[k] = b
            dist[:] = -1
            dist[0] = 0
            queue[0] = 0
            head, tail = 0, 1
            while head < tail:
                v = queue[head]
                head += 1
                nd = dist[v] + 1
                t = trans[a, v]
                if dist[t] < 0:
                    dist[t] = nd
                    queue[tail] = t
                    tail += 1
                t = trans[b, v]
                if dist[t] < 0:
                    dist[t] = nd
                    queue[tail] = t
                    tail += 1
            if tail < n:
                k += 1
                continue
            D = dist[queue[n - 1]]
            out_d[k] = D
            if with_mdds:
                nu = 0
                nv = 0
                jb = 0  # index of j*b
                for j in range(D + 2):
                    i0 = pos[jb]
                    if i0 >= 0:
                        if j <= D:
                            i = i0 if i0 >= 1 else oa
                            while i <= D + 1:
                                ul[nu] = i
                                uy[nu] = j
                                nu += 1
                                i += oa
                        if j >= 1:
                            i = i0
                            while i <= D:
                                vw[nv] = i
                                vh[nv] = j
                                nv += 1
                                i += oa
                    jb = trans[b, jb]
                count = 0
                bad = 0
                for p in range(nu):
                    l = ul[p]
                    y = uy[p]
                    for q in range(nv):
                        w = vw[q]
                        h = vh[q]
                        if w < l and y < h and l * h - w * y == n:
                            f1 = l - y
                            f2 = h - w
                            if f1 * f2 >= 0 and (f1 != 0 or f2 != 0):
                                dl = l + h - min(w, y) - 2
                                if dl <= D:
                                    count += 1
                                    if dl != D:
                                        bad += 1
                out_count[k] = count
                out_bad[k] = bad
            k += 1
    return out_a, out_b, out_d, out_count, out_bad


@dataclass
class GroupCensus:
    """Per-pair results over one group; pairs are element indices ``a < b``."""

    group: AbelianGroup2
    a_index: np.ndarray
    b_index: np.ndarray
    diameter: np.ndarray  # -1 where the pair does not generate
    mdd_count: np.ndarray
    mdd_mismatch: np.ndarray  # diagrams whose diameter differs from BFS

    @property
    def generating(self) -> np.ndarray:
        return self.diameter >= 0

    @property
    def n_digraphs(self) -> int:
        return int(self.generating.sum())

    def min_diameter(self) -> int | None:
        valid = self.diameter[self.generating]
        return int(valid.min()) if valid.size else None

    def digraph(self, k: int) -> CayleyDigraph2:
        g = self.group
        return CayleyDigraph2(g, g.element(int(self.a_index[k])), g.element(int(self.b_index[k])))


def census(N: int, with_mdds: bool = True) -> list[GroupCensus]:
    """Run the exhaustive census for every canonical group of order ``N``."""
    if N < 3:
        raise ValueError(f"2-Cayley digraphs need order >= 3, got {N}")
    results = []
    for group in canonical_groups(N):
        a, b, d, count, bad = _census_kernel(group.s1, group.s2, with_mdds)
        results.append(GroupCensus(group, a, b, d, count, bad))
    return results
