"""Published table data used by ``verify`` and the acceptance tests.

Digraph strings use the CLI grammar: ``"N;a;b"`` for cyclic groups and
``"s1,s2;a1,a2;b1,b2"`` otherwise.
"""

from __future__ import annotations

from typing import NamedTuple


class OptimaRow(NamedTuple):
    N: int
    lb: int
    d1: int
    cyclic: str
    d2: int
    noncyclic: str


class ImprovementRow(NamedTuple):
    source: str
    N: int
    original: str | None  # only the order is published for some rows
    T: int
    improved: str
    T_improved: int
    m: int


class SymbolicRow(NamedTuple):
    family: str
    param: str
    T: int
    T_improved: int
    m: int


# Optimal diameters over cyclic and non-cyclic groups, non-square-free orders.
TABLE1 = [
    OptimaRow(8, 3, 3, "8;1;3", 4, "2,4;0,1;1,1"),
    OptimaRow(9, 4, 4, "9;1;2", 4, "3,3;0,1;1,0"),
    OptimaRow(12, 4, 5, "12;1;4", 4, "2,6;0,1;1,2"),
    OptimaRow(16, 5, 5, "16;1;7", 6, "2,8;0,1;1,2"),
    OptimaRow(18, 6, 6, "18;1;4", 7, "3,6;0,1;1,0"),
    OptimaRow(20, 6, 7, "20;1;3", 6, "2,10;0,1;1,2"),
]

# Double-loop networks of extended tightness T replaced by digraphs over
# non-cyclic groups of tightness T' via an m-quotient and m-extension.
TABLE3 = [
    # remarks on a family of optimal double-loop networks
    ImprovementRow("WZGW2010", 2176, "2176;1;111", 2, "2,1088;0,13;1,28", 1, 2),
    ImprovementRow("WZGW2010", 3252, None, 2, "2,1626;1,286;1,575", 1, 2),
    ImprovementRow("WZGW2010", 3932, None, 2, "2,1966;0,13;1,36", 1, 2),
    ImprovementRow("WZGW2010", 4096, None, 2, "2,2048;1,1545;0,1043", 1, 2),
    ImprovementRow("WZGW2010", 4400, None, 2, "5,880;1,7;2,15", 0, 5),
    ImprovementRow("WZGW2010", 4540, None, 2, "2,2270;1,457;1,1370", 1, 2),
    ImprovementRow("WZGW2010", 4692, None, 2, "2,2346;0,17;1,43", 1, 2),
    ImprovementRow("WZGW2010", 5512, None, 2, "2,2756;0,19;1,43", 1, 2),
    ImprovementRow("WZGW2010", 3316, None, 3, "2,1658;0,15;1,34", 0, 2),
    ImprovementRow("WZGW2010", 21104, None, 3, "4,5276;1,19;3,42", 0, 4),
    ImprovementRow("WZGW2010", 23192, None, 3, "2,11596;1,2233;0,4467", 2, 2),
    # explicit 4-tight double loops
    ImprovementRow("CX2004-L4", 159076, "159076;1;676", 4, "2,79538;0,113;1,233", 1, 2),
    ImprovementRow("CX2004-L4", 210488, "210488;1;6696", 4, "2,105244;1,129;1,268", 3, 2),
    # algorithmic 5-tight double loops, orders in the millions
    ImprovementRow("CX2004-A2", 6505839, None, 5, "9,722871;3,374981;7,330", 1, 9),
    ImprovementRow("CX2004-A2", 8351836, None, 5, "2,4175918;1,813;1,1664", 0, 2),
    ImprovementRow("CX2004-A2", 8568124, None, 5, "2,4284062;1,816;1,1709", 2, 2),
    ImprovementRow("CX2004-A2", 8600936, None, 5, "2,4300468;0,823;1,1708", 2, 2),
]

# Symbolic improvements; parameters are lambda, lambda, e and t respectively.
TABLE4 = [
    SymbolicRow("LXZ1odd", "lambda", 1, 0, 2),
    SymbolicRow("LXZ1even", "lambda", 1, 0, 2),
    SymbolicRow("LXZ2", "e", 1, 0, 2),
    SymbolicRow("LXZ3", "t", 1, 0, 1),
]

# Base diameters of the three double-loop rows and of their 2-extensions,
# as functions of t.
TABLE2_DIAMETERS = {
    1: (lambda t: 6 * t - 1, lambda t: 12 * t),
    2: (lambda t: 3 * t, lambda t: 6 * t + 2),
    3: (lambda t: 3 * t + 1, lambda t: 6 * t + 4),
}
TABLE2_ORDERS = {
    1: lambda t: 4 * (12 * t * t + 1),
    2: lambda t: 4 * (3 * t * t + 2 * t + 1),
    3: lambda t: 4 * (3 * t * t + 4 * t + 2),
}
