from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from barrierpath.graph import Edge, NonUnitCoefficients, Path, WeightedGraph
from barrierpath.greedy import (
    PathProfile,
    extend,
    greedy_assign,
    greedy_powers,
    profile,
    profile_of_weights,
)
from oracles import grid_min_literal, grid_min_path


def line(ws):
    verts = ["v%d" % i for i in range(len(ws) + 1)]
    g = WeightedGraph.build(list(zip(verts, verts[1:], ws)), verts[0], verts[-1])
    return g, Path.along(g, verts)


@pytest.mark.parametrize(
    "ws, powers, phi",
    [([5, 3], [0, 5, 0], 0), ([3, 5], [0, 3, 2], 2), ([4], [0, 4], 4)],
)
def test_greedy_examples(ws, powers, phi):
    g, path = line(ws)
    p = greedy_assign(path, g)
    assert [p[v] for v in path.vertices] == powers
    assert profile(path, g) == PathProfile(sum(powers), phi)


def test_single_vertex_profile():
    g = WeightedGraph.build([("a", "b", 1)], "a", "b")
    assert profile(Path(("a",)), g) == PathProfile(0, 0)


def test_lower_choice_prefix():
    # weights L + a1 and L + 3 a1 with L = 22, a1 = 2
    assert profile_of_weights([24, 28]) == PathProfile(28, 4)
    assert grid_min_literal([24, 28]) == 28


@pytest.mark.parametrize(
    "start, w, out",
    [(PathProfile(5, 2), 1, PathProfile(5, 0)), (PathProfile(5, 2), 6, PathProfile(9, 4)), (PathProfile(), 7, PathProfile(7, 7))],
)
def test_extend_examples(start, w, out):
    assert extend(start, w) == out


def test_extend_rejects_nonpositive():
    with pytest.raises(ValueError):
        extend(PathProfile(), 0)


def test_non_unit_rejected():
    g = WeightedGraph.build([Edge("s", "t", 4, alpha=2)], "s", "t")
    with pytest.raises(NonUnitCoefficients):
        greedy_assign(Path(("s", "t"), (0,)), g)


def test_grid_oracles_agree():
    for ws in ([1], [3, 5], [5, 3], [2, 7, 2], [4, 1, 4]):
        assert grid_min_path(ws) == grid_min_literal(ws)


short = st.lists(st.integers(1, 20), min_size=1, max_size=6)


@given(short)
def test_greedy_matches_grid_minimum(ws):
    g, path = line(ws)
    assert greedy_assign(path, g).cost == grid_min_path(ws)


@given(short, st.integers(1, 20))
def test_prolongation_consistency(ws, w):
    assert extend(profile_of_weights(ws), w) == profile_of_weights(ws + [w])


@given(short)
def test_integer_weights_give_integer_powers(ws):
    assert all(isinstance(p, int) and p >= 0 for p in greedy_powers(ws))


@given(st.lists(st.fractions(min_value=Fraction(1, 7), max_value=20), min_size=1, max_size=5))
def test_profile_bounds(ws):
    prof = profile_of_weights(ws)
    assert prof.opt >= max(ws) and prof.opt >= prof.phi and 0 <= prof.phi <= max(ws)


fr = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@given(fr, fr)
def test_squeeze_forces_equality(A, B):
    # A + max(2B - 2A, 0) <= B only when A == B
    if A + max(2 * B - 2 * A, 0) <= B:
        assert A == B


def test_squeeze_boundary():
    A = B = Fraction(3, 7)
    assert A + max(2 * B - 2 * A, 0) <= B
