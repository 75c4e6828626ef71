"""The jitted and pure-numpy kernels must agree bit for bit."""

import numpy as np
import pytest

from sl2blocks import _kernels_numba as knb
from sl2blocks import _kernels_numpy as knp
from sl2blocks.pbw import Character, algebra

CHARS = [Character.zero(), Character.nilpotent_e(), Character.regular(2)]


def _rand_vec(alg, rng):
    return rng.integers(0, alg.field.q, alg.dim).astype(np.int64)


@pytest.mark.parametrize("chi", CHARS, ids=str)
def test_alg_mul_and_left_mul_matrix_agree(chi):
    alg = algebra(5, chi)
    rng = np.random.default_rng(1)
    args = (alg.p, alg.echar, alg.hshift, alg.rhf, alg.rhe, alg.reb,
            alg.field.add, alg.field.mul)
    for _ in range(4):
        u, v = _rand_vec(alg, rng), _rand_vec(alg, rng)
        assert np.array_equal(knb.alg_mul(u, v, *args), knp.alg_mul(u, v, *args))
    u = _rand_vec(alg, rng)
    assert np.array_equal(knb.left_mul_matrix(u, *args), knp.left_mul_matrix(u, *args))


@pytest.mark.parametrize("chi", CHARS, ids=str)
def test_gen_apply_agree(chi):
    alg = algebra(3, chi)
    rng = np.random.default_rng(2)
    for _ in range(3):
        v = _rand_vec(alg, rng)
        for gen in (0, 1, 2):
            a = knb.gen_left(v, gen, alg.p, alg.echar, alg.hshift,
                             alg.field.add, alg.field.mul)
            b = knp.gen_left(v, gen, alg.p, alg.echar, alg.hshift,
                             alg.field.add, alg.field.mul)
            assert np.array_equal(a, b)
            a = knb.gen_right(v, gen, alg.p, alg.echar, alg.hshift, alg.rhf,
                              alg.rhe, alg.reb, alg.field.add, alg.field.mul)
            b = knp.gen_right(v, gen, alg.p, alg.echar, alg.hshift, alg.rhf,
                              alg.rhe, alg.reb, alg.field.add, alg.field.mul)
            assert np.array_equal(a, b)


@pytest.mark.parametrize("chi", CHARS, ids=str)
def test_gram_agree(chi):
    alg = algebra(3, chi)
    a = knb.gram(alg.p, alg.echar, alg.hshift, alg.field.add, alg.field.mul)
    b = knp.gram(alg.p, alg.echar, alg.hshift, alg.field.add, alg.field.mul)
    assert np.array_equal(a, b)


def test_rref_and_matmul_agree():
    F = algebra(7, Character.zero()).field
    rng = np.random.default_rng(3)
    for shape in ((12, 20), (20, 12), (15, 15)):
        M = rng.integers(0, 7, shape).astype(np.int64)
        M1, M2 = M.copy(), M.copy()
        r1, p1 = knb.rref(M1, F.add, F.mul, F.inv, F.neg)
        r2, p2 = knp.rref(M2, F.add, F.mul, F.inv, F.neg)
        assert r1 == r2 and np.array_equal(M1, M2) and np.array_equal(p1[:r1], p2[:r2])
    A = rng.integers(0, 7, (9, 11)).astype(np.int64)
    B = rng.integers(0, 7, (11, 6)).astype(np.int64)
    assert np.array_equal(knb.matmul(A, B, F.add, F.mul), knp.matmul(A, B, F.add, F.mul))
    x = rng.integers(0, 7, 11).astype(np.int64)
    assert np.array_equal(knb.matvec(A, x, F.add, F.mul), knp.matvec(A, x, F.add, F.mul))
    assert np.array_equal((A @ B) % 7, knb.matmul(A, B, F.add, F.mul))


def test_rep_tensor_agree():
    from sl2blocks.repdec import simple_module

    alg = algebra(3, Character.zero())
    L = simple_module(alg, 2)
    a = knb.rep_tensor(L.E, L.F, L.H, alg.p, alg.field.add, alg.field.mul)
    b = knp.rep_tensor(L.E, L.F, L.H, alg.p, alg.field.add, alg.field.mul)
    assert np.array_equal(a, b)
