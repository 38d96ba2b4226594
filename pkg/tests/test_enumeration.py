import pytest
from hypothesis import given
from hypothesis import strategies as st

from translens.enumeration import (
    InitialConditionIndex,
    init_condition,
    initial_conditions,
)

FIRST_FOURTEEN = [
    "0", "1",
    "00", "01", "11", "10",
    "000", "001", "011", "010", "110", "111", "101", "100",
]


def test_first_fourteen():
    assert initial_conditions(14) == FIRST_FOURTEEN


def test_group_boundaries():
    # Group of length L starts at index 2**L - 1.
    for length in range(1, 10):
        assert init_condition(2**length - 1) == "0" * length


def test_index_invariant():
    for j in range(1, 300):
        idx = InitialConditionIndex.from_global(j)
        assert j == (2**idx.length - 2) + idx.rank + 1
        assert 0 <= idx.rank < 2**idx.length


@given(st.integers(1, 2**14 - 2))
def test_consecutive_same_length_differ_in_one_bit(j):
    a = init_condition(j)
    b = init_condition(j + 1)
    if len(a) == len(b):
        assert sum(x != y for x, y in zip(a, b)) == 1


def test_hamming_distance_exhaustive_small_lengths():
    for length in range(1, 9):
        group = [init_condition(2**length - 1 + r) for r in range(2**length)]
        assert len(set(group)) == len(group)
        for a, b in zip(group, group[1:]):
            assert sum(x != y for x, y in zip(a, b)) == 1


def test_prefix_property():
    assert initial_conditions(40) == initial_conditions(41)[:40]


def test_no_duplicates():
    strings = initial_conditions(1000)
    assert len(set(strings)) == 1000


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        init_condition(0)
    with pytest.raises(ValueError):
        initial_conditions(0)
