"""
How far does an extension stay tight?
=====================================

Multiplying both moduli of a tight digraph of order N by m gives order
m^2 N.  It stays tight for m up to the extension coefficient c(N).
"""

import numpy as np

from twocayley.digraph import diameter, parse_digraph
from twocayley.intmath import lower_bound_diameter
from twocayley.procedures import coefficient_table, extend, extension_coefficient

d = parse_digraph("189;1;56")
print(d, "diameter", diameter(d), "lb", lower_bound_diameter(189))
print("c(189) =", extension_coefficient(189))

for m in range(1, 8):
    e = extend(d, m)
    k = diameter(e) - lower_bound_diameter(e.order)
    print(f"m={m}  {e}  k={k}")

# the largest values sit at N = 3t^2 + 2t and N = 3t^2 + 4t + 1
table = np.array(coefficient_table(400))
top = table[np.argsort(table[:, 1])[-5:]]
print("largest c(N) for N <= 400:")
print(top)
