from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jtkit.quadric import (
    METHODS,
    QuadricContext,
    chi_o_dim,
    multigraded_hs_check,
    orthogonal_stable_decomposition,
    qdual_term_class,
    quadric_schur_dim,
    quadric_term_class,
)
from jtkit.shapes import SkewShape, partitions_of
from jtkit.symfunc import binom, dim_gl

from conftest import partitions, sub_partition

CTX2 = QuadricContext(2)
CTX3 = QuadricContext(3)
CTX4 = QuadricContext(4)

SKEW = partitions(max_size=7, max_part=5, max_length=4).flatmap(
    lambda lam: st.tuples(st.just(lam), sub_partition(lam))
)


def test_context_basics():
    assert CTX3.m == 3
    assert CTX3.sequence.term(2) == 5
    assert CTX3.dual.term(2) == 4
    with pytest.raises(AttributeError):
        CTX3.m = 5
    with pytest.raises(ValueError):
        QuadricContext(0)


def test_frozen_dimensions():
    table = {
        (1, 1): 4,
        (2, 1): 8,
        (3, 1): 12,
        (3, 2): 8,
        (3, 3): 4,
        (2, 2): 4,
        (2, 1, 1): 8,
        (2, 2, 1): 4,
    }
    for lam, want in table.items():
        assert quadric_schur_dim(CTX3, lam) == want, lam
    for d in range(1, 6):
        assert quadric_schur_dim(CTX3, (1,) * d) == 4 or d == 1
    assert quadric_schur_dim(CTX3, (1,)) == 3
    assert quadric_schur_dim(CTX2, (1, 1)) == 2


def test_vanishing_law():
    # columns deeper than one box below row m kill the functor
    assert quadric_schur_dim(CTX3, (2, 2, 2)) == 0
    assert quadric_schur_dim(CTX2, (2, 2)) == 0
    assert quadric_schur_dim(CTX2, (3, 2)) == 0
    assert quadric_schur_dim(CTX3, (4, 4, 4)) == 0
    assert quadric_schur_dim(CTX3, (2, 2, 1)) != 0


def test_unknown_method():
    with pytest.raises(ValueError):
        quadric_schur_dim(CTX3, (1,), method="nope")


@given(st.integers(2, 5), SKEW)
@settings(deadline=None, max_examples=80)
def test_three_routes_agree(m, pair):
    lam, mu = pair
    ctx = QuadricContext(m)
    shape = SkewShape(lam, mu)
    values = {method: quadric_schur_dim(ctx, shape, method) for method in METHODS}
    assert len(set(values.values())) == 1, values
    assert values["jt"] >= 0


def test_term_class_matches_sequence():
    for m in (1, 2, 3, 4):
        ctx = QuadricContext(m)
        for d in range(8):
            assert quadric_term_class(d).dim((m,)) == ctx.sequence.term(d)
            assert qdual_term_class(d).dim((m,)) == ctx.dual.term(d)


def test_term_class_negative_coefficient():
    cls = quadric_term_class(2)
    assert cls.coefficient(((2,),)) == 1
    assert cls.coefficient(((),)) == -1


def test_chi_o_frozen():
    assert chi_o_dim((), 2) == 1
    assert chi_o_dim((1, 1), 4) == 6
    assert chi_o_dim((1,), 5) == 5
    for m in (2, 3, 4, 6):
        assert chi_o_dim((1,), m) == m
        assert chi_o_dim((2,), m) == binom(m + 1, 2) - 1
    with pytest.raises(ValueError):
        chi_o_dim((1, 1), 3)
    with pytest.raises(ValueError):
        chi_o_dim((2, 1, 1), 4)


def test_ortho_decomposition_frozen():
    dec = orthogonal_stable_decomposition(CTX4, (1, 1))
    assert dec.entries == (((), 1), ((1, 1), 1))
    assert dec.dimension() == 7
    assert dec.dimension() == quadric_schur_dim(CTX4, (1, 1))
    only = orthogonal_stable_decomposition(CTX4, (2,))
    assert only.entries == (((2,), 1),)
    assert only.to_json() == [{"mu": [2], "mult": 1}]
    with pytest.raises(ValueError):
        orthogonal_stable_decomposition(CTX3, (1, 1))


@given(partitions(max_size=6, max_part=4, max_length=3))
@settings(deadline=None, max_examples=30)
def test_ortho_decomposition_dimension(lam):
    for m in (2 * max(len(lam), 1), 2 * max(len(lam), 1) + 1):
        ctx = QuadricContext(m)
        dec = orthogonal_stable_decomposition(ctx, lam)
        assert dec.dimension() == quadric_schur_dim(ctx, lam)
        assert all(mult > 0 for _, mult in dec.entries)


@given(partitions(max_size=6, max_part=4, max_length=3))
@settings(deadline=None, max_examples=25)
def test_littlewood_branching_dimension(lam):
    # restricting the GL irrep to the orthogonal group pairs mu with doubled
    # rows; summing dimensions must recover the full GL dimension
    from jtkit.shapes import subpartitions
    from jtkit.symfunc import lr_coefficient

    m = 2 * max(len(lam), 1)
    total = 0
    for mu in subpartitions(lam):
        rem = sum(lam) - sum(mu)
        if rem % 2:
            continue
        mult = sum(
            lr_coefficient(lam, mu, tuple(2 * p for p in nu))
            for nu in partitions_of(rem // 2)
        )
        total += mult * chi_o_dim(mu, m)
    assert total == dim_gl(lam, m)


def test_multigraded_hs():
    for m in (1, 2, 3, 4):
        for n in (1, 2, 3):
            report = multigraded_hs_check(m, n, trunc=5)
            assert report["ok"], (m, n)
            assert report["m"] == m and report["n"] == n
    with pytest.raises(ValueError):
        multigraded_hs_check(2, 2, trunc=13)
    with pytest.raises(ValueError):
        multigraded_hs_check(2, 2, trunc=-1)


def test_multigraded_hs_payload_shape():
    report = multigraded_hs_check(3, 2, trunc=6)
    assert set(report) >= {"m", "n", "trunc", "ok"}
    assert report["ok"] is True
