from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jtkit.determinant import det_bareiss, det_expand

from oracles import det_fraction

MATS = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@given(MATS)
@settings(deadline=None)
def test_bareiss_matches_fraction_elimination(rows):
    assert det_bareiss(rows) == det_fraction(rows)


@given(MATS)
@settings(deadline=None)
def test_expand_matches_bareiss(rows):
    assert det_expand(rows, 0) == det_bareiss(rows)


def test_empty_matrix():
    assert det_bareiss([]) == 1
    with pytest.raises(ValueError):
        det_expand([], 0)


def test_pivot_swap():
    # leading zero forces a row swap and a sign flip
    rows = [[0, 1], [1, 0]]
    assert det_bareiss(rows) == -1


def test_singular():
    rows = [[1, 2], [2, 4]]
    assert det_bareiss(rows) == 0
    assert det_expand(rows, 0) == 0


def test_expand_order_cap():
    n = 9
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    with pytest.raises(ValueError):
        det_expand(rows, 0)


def test_known_values():
    assert det_bareiss([[5]]) == 5
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, 0, 1], [1, 1, 0], [0, 3, 1]]) == 5


def test_random_larger_orders():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 7)
        rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(rows) == det_fraction(rows)
