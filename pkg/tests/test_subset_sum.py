import pytest
from hypothesis import given, strategies as st

from barrierpath.subset_sum import SubsetSumInstance, solve
from oracles import subset_sum_witness


def test_examples():
    found = solve(SubsetSumInstance((2, 3, 3, 2), 7))
    assert found == (1, 2, 4) == subset_sum_witness((2, 3, 3, 2), 7)
    assert solve(SubsetSumInstance((2,), 1)) == ()
    assert solve(SubsetSumInstance((1, 2, 4), 7)) == (1, 2, 3)


@pytest.mark.parametrize("a, b", [((), 1), ((0,), 1), ((1,), 0), ((1.5,), 1), ((True,), 1)])
def test_invalid(a, b):
    with pytest.raises(ValueError):
        SubsetSumInstance(a, b)


@given(st.lists(st.integers(1, 30), min_size=1, max_size=12), st.integers(1, 120))
def test_agrees_with_enumeration(a, b):
    found = solve(SubsetSumInstance(tuple(a), b))
    assert found == subset_sum_witness(a, b)
    if found:
        assert sum(a[i - 1] for i in found) == b


def test_large_numbers():
    a = (10 ** 6 + 3, 10 ** 6 + 7, 2 * 10 ** 6 + 10)
    assert solve(SubsetSumInstance(a, 2 * 10 ** 6 + 10)) == (1, 2)
