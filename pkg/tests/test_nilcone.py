"""Graded ring of the restricted nilpotent cone: two dimension computations
and the comparison with block quotients."""

import pytest

from sl2blocks.nilcone import (
    compare_block_quotient,
    nilcone_dims_closed,
    nilcone_dims_oracle,
    nilcone_ring,
    nilcone_weights,
)
from sl2blocks.blocks import block_labels
from sl2blocks.pbw import Character, algebra


def test_pinned_dim_rows():
    assert nilcone_dims_oracle(5) == [1, 3, 5, 7, 9, 8, 4]
    assert nilcone_dims_oracle(3) == [1, 3, 5, 4]
    assert nilcone_dims_closed(7) == [1, 3, 5, 7, 9, 11, 13, 12, 8, 4]
    assert nilcone_dims_closed(5)[5] == 8  # degree p
    assert nilcone_dims_closed(5)[6] == 4  # final degree 3(p-1)/2


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_oracle_matches_closed_form(p):
    oracle = nilcone_dims_oracle(p)
    assert oracle == nilcone_dims_closed(p)
    assert sum(oracle) == p * p + (p * p - 1) // 2


def test_weights():
    assert nilcone_weights(5, 0) == {0: 1}
    assert nilcone_weights(5, 1) == {0: 1, 2: 1, 3: 1}
    # degree 2 reduces x_a^2 = -x_b x_c: weights {0, +-2, +-4} mod 5
    assert nilcone_weights(5, 2) == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    assert nilcone_weights(5, 99) == {}
    for p in (3, 5, 7):
        ring = nilcone_ring(p)
        for d, wt in enumerate(ring.weights):
            assert sum(wt.values()) == ring.dims[d]
            assert all(wt.get((-w) % p, 0) == m for w, m in wt.items())


@pytest.mark.parametrize("p", (3, 5, 7))
def test_block_quotient_comparison(p):
    A = algebra(p, Character.zero())
    for lab in block_labels(A):
        rep = compare_block_quotient(A, lab)
        assert rep["ok"], rep
        assert rep["total"] == rep["expected_total"] == p * p + 2 * lab.omega * (
            p - lab.omega
        )


def test_block_quotient_requires_zero_character():
    A = algebra(3, Character.nilpotent_e())
    with pytest.raises(ValueError):
        compare_block_quotient(A, block_labels(A)[0])


@pytest.mark.parametrize("p,a", [(3, 1), (5, 2)])
def test_regular_pushforward_matches_truncated_nilcone(p, a):
    from sl2blocks import filt

    A = algebra(p, Character.regular(a))
    dims = nilcone_dims_closed(p)
    for lab in block_labels(A):
        t = filt.filtration(A, lab, "pf")
        want = tuple(dims[d] if d < p else 0 for d in range(3 * (p - 1) + 1))
        assert t.graded == want
        assert sum(t.graded) == p * p
