"""
From L-shapes to digraphs
=========================

An L-shaped diagram L(l, h, w, y) tiles the plane, and the lattice of its
tiles gives an Abelian group with two generators.  Here we go back and
forth between the two pictures.
"""

from twocayley.digraph import diameter, find_mdds, parse_digraph
from twocayley.intmath import lower_bound_diameter
from twocayley.lshape import LShape, diameter as lshape_diameter
from twocayley.snf import digraph_of, matrix_of, smith_normal_form

# a diagram of area 8*7 - 3*2 = 50
L = LShape(8, 7, 3, 2)
print(L, "area", L.area, "diameter", lshape_diameter(L))

# the Smith normal form of [[l, -w], [-y, h]] names the group,
# and the columns of U are the generators
snf = smith_normal_form(matrix_of(L))
print("S =", snf.S, "U =", snf.U)

d = digraph_of(L)
print(d)
print("BFS diameter:", diameter(d), " lower bound:", lower_bound_diameter(d.order))

# going the other way: every minimum distance diagram of a digraph
d = parse_digraph("2,10;0,1;1,2")
for H in find_mdds(d):
    print(H, lshape_diameter(H))
