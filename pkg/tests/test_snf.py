import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from twocayley.digraph import DegenerateDigraphError, diameter, is_mdd_for
from twocayley.lshape import LShape, has_degenerate_generators, is_admissible
from twocayley.lshape import diameter as lshape_diameter
from twocayley.snf import det, digraph_of, matmul, matrix_of, smith_normal_form

from oracles import naive_invariant_factors

entries = st.integers(-60, 60)


@given(entries, entries, entries, entries)
def test_snf_properties(p, q, r, s):
    M = ((p, q), (r, s))
    assume(det(M) != 0)
    snf = smith_normal_form(M)
    assert matmul(matmul(snf.U, M), snf.V) == snf.S
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    assert snf.s2 % snf.s1 == 0
    assert (snf.s1, snf.s2) == naive_invariant_factors(M)


def test_singular_rejected():
    with pytest.raises(ValueError):
        smith_normal_form(((2, 4), (1, 2)))


def test_example_decompositions():
    snf = smith_normal_form(matrix_of(LShape(8, 8, 4, 4)))
    assert (snf.s1, snf.s2) == (4, 12)
    snf = smith_normal_form(matrix_of(LShape(5, 4, 2, 2)))
    assert (snf.s1, snf.s2) == (1, 16)


@pytest.mark.parametrize("t", range(1, 12))
def test_published_unimodular_witnesses(t):
    # witnesses are not unique; the published ones must still satisfy S = U M V
    cases = [
        (LShape(2 * t + 1, 2 * t, t, t), ((1, 2), (t, 2 * t + 1)), ((1, -3 * t), (0, 1))),
        (LShape(2 * t + 1, 2 * t + 1, t, t), ((1, 2), (t, 2 * t + 1)), ((1, -3 * t - 2), (0, 1))),
        (LShape(2 * t + 2, 2 * t + 1, t, t), ((2, 1), (2 * t + 1, t)), ((0, 1), (1, -3 * t - 4))),
        (LShape(4 * t, 4 * t, 2 * t - 1, 2 * t + 1), ((3 * t, -1), (-6 * t + 1, 2)),
         ((1, 6 * t * t + t), (2, 12 * t * t + 2 * t + 1))),
    ]
    for L, U, V in cases:
        M = matrix_of(L)
        assert matmul(matmul(U, M), V) == ((1, 0), (0, L.area))
        assert smith_normal_form(M).S == ((1, 0), (0, L.area))


def test_digraph_of_examples():
    d = digraph_of(LShape(8, 8, 4, 4))
    assert (d.group.s1, d.group.s2) == (4, 12)
    assert diameter(d) == 10
    d = digraph_of(LShape(2, 2, 1, 1))
    assert d.order == 3 and diameter(d) == 1


def test_degenerate_diagram_raises():
    with pytest.raises(DegenerateDigraphError):
        digraph_of(LShape(1, 5, 0, 0))


@st.composite
def small_admissible(draw):
    l = draw(st.integers(1, 14))
    h = draw(st.integers(1, 14))
    L = LShape(l, h, draw(st.integers(0, l - 1)), draw(st.integers(0, h - 1)))
    assume(is_admissible(L) and L.area >= 3 and not has_degenerate_generators(L))
    return L


@given(small_admissible())
def test_digraph_of_round_trip(L):
    d = digraph_of(L)
    assert d.order == L.area
    assert d.group.s1 == L.gcd
    assert is_mdd_for(L, d)
    assert diameter(d) == lshape_diameter(L)


def test_exhaustive_small_matrices():
    # includes ((1, 0), (-1, 2)), where a Bezout row step used to undo itself
    import itertools

    for p, q, r, s in itertools.product(range(-4, 5), repeat=4):
        M = ((p, q), (r, s))
        if det(M) == 0:
            continue
        snf = smith_normal_form(M)
        assert (snf.s1, snf.s2) == naive_invariant_factors(M)
