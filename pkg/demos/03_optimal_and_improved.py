"""
Optimal diameters and the quotient-extension trick
==================================================

For non-square-free N both cyclic and non-cyclic groups compete.  When the
best double loop of order N is k-tight, a quotient by m followed by an
m-extension can land on a better non-cyclic digraph.
"""

from twocayley.digraph import diameter
from twocayley.search import optimal_diameters, qe_improve

for N in (8, 12, 16, 20, 36):
    res = optimal_diameters(N)
    print(f"N={N:3d}  lb={res.lb}  cyclic={res.d1}  non-cyclic={res.d2}")

# a 2-tight double loop of order 2176 and a 1-tight replacement
rec = qe_improve(2176, 2)
print("m =", rec.m, "base", rec.base, "->", rec.improved_mdd)
print(rec.improved, "k =", rec.improved_report.k)
print("BFS agrees:", diameter(rec.improved) == rec.improved_report.diameter)

# orders in the millions are handled by diagrams alone
rec = qe_improve(6505839, 5)
print(rec.improved, "k =", rec.improved_report.k)
