"""Exact linear algebra and the canonical subspace calculus."""

import numpy as np
import pytest

from sl2blocks.ffield import prime_field
from sl2blocks.linalg import (
    Subspace,
    jordan_type_nilpotent,
    kernel,
    orth_complement,
    rank,
    solve,
)

F5 = prime_field(5)


def test_rank_identity_and_kernel():
    assert rank(np.eye(6, dtype=np.int64), F5) == 6
    K = kernel(np.array([[1, 1, 1]], dtype=np.int64), F5)
    assert K.dim == 2
    M = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64)
    K = kernel(M, F5)
    assert K.dim == 2
    for row in K.basis:
        assert not np.any((M @ row) % 5)


def test_solve():
    M = np.array([[1, 1], [0, 0]], dtype=np.int64)
    assert solve(M, np.array([2, 1], dtype=np.int64), F5) is None
    x = solve(M, np.array([3, 0], dtype=np.int64), F5)
    assert x is not None and np.array_equal((M @ x) % 5, [3, 0])
    with pytest.raises(ValueError):
        solve(M, np.array([1, 2, 3], dtype=np.int64), F5)


def test_span_canonical_under_shuffle():
    rng = np.random.default_rng(0)
    M = rng.integers(0, 5, (6, 9)).astype(np.int64)
    U = Subspace.span(F5, M)
    for seed in range(5):
        perm = np.random.default_rng(seed).permutation(6)
        mixed = M[perm]
        # also rescale rows by nonzero scalars
        scal = np.random.default_rng(seed + 10).integers(1, 5, 6)
        mixed = (mixed * scal[:, None]) % 5
        V = Subspace.span(F5, mixed)
        assert U == V
        assert U.basis.tobytes() == V.basis.tobytes()


def test_sum_intersect_dimension_identity():
    rng = np.random.default_rng(4)
    for _ in range(25):
        U = Subspace.span(F5, rng.integers(0, 5, (3, 6)).astype(np.int64))
        W = Subspace.span(F5, rng.integers(0, 5, (3, 6)).astype(np.int64))
        S = U + W
        I = U.intersect(W)
        assert S.dim + I.dim == U.dim + W.dim
        assert U.intersect(U) == U
        assert (U + Subspace.zero(F5, 6)) == U
        for row in I.basis:
            assert U.contains(row) and W.contains(row)


def test_contains_and_coords():
    U = Subspace.span(F5, np.array([[1, 2, 0], [0, 0, 1]], dtype=np.int64))
    v = np.array([2, 4, 3], dtype=np.int64)
    assert U.contains(v)
    assert not U.contains(np.array([0, 1, 0], dtype=np.int64))
    c = U.coords(v)
    assert list(c) == [2, 3]


def test_orth_complement_double():
    rng = np.random.default_rng(7)
    n = 6
    # nonsingular symmetric Gram matrix
    while True:
        G = rng.integers(0, 5, (n, n)).astype(np.int64)
        G = (G + G.T) % 5
        if rank(G, F5) == n:
            break
    full = Subspace.full(F5, n)
    assert orth_complement(full, G).dim == 0
    assert orth_complement(Subspace.zero(F5, n), G) == full
    for _ in range(10):
        U = Subspace.span(F5, rng.integers(0, 5, (3, n)).astype(np.int64))
        Up = orth_complement(U, G)
        assert U.dim + Up.dim == n
        assert orth_complement(Up, G) == U


def test_jordan_type():
    assert jordan_type_nilpotent(np.zeros((3, 3), dtype=np.int64), F5) == [1, 1, 1]
    J2 = np.array([[0, 1], [0, 0]], dtype=np.int64)
    assert jordan_type_nilpotent(J2, F5) == [2]
    N = np.zeros((5, 5), dtype=np.int64)
    N[0, 1] = N[1, 2] = N[3, 4] = 1
    assert jordan_type_nilpotent(N, F5) == [3, 2]
    with pytest.raises(ValueError):
        jordan_type_nilpotent(np.eye(3, dtype=np.int64), F5)


def test_jordan_type_ad_e_total():
    from sl2blocks.pbw import Character, algebra

    alg = algebra(3, Character.zero())
    parts = jordan_type_nilpotent(alg.ad_matrix("e"), alg.field)
    assert sum(parts) == 27
    assert all(s <= 3 * (alg.p - 1) + 1 for s in parts)
