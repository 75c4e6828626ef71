"""Central idempotents, block subalgebras, coinvariants."""

import itertools

import numpy as np
import pytest

from sl2blocks import backend
from sl2blocks.blocks import (
    block_labels,
    center_relation,
    coinvariants,
    get_blocks,
    idempotent_poly,
    weight_to_alpha,
)
from sl2blocks.ffield import Poly
from sl2blocks.linalg import Subspace, matvec
from sl2blocks.pbw import Character, algebra


def test_center_relation_polys():
    A = algebra(5, Character.zero())
    assert center_relation(A) == Poly.from_ints(A.field, [0, 1, 0, -2, 0, 1])
    Ae = algebra(5, Character.nilpotent_e())
    assert center_relation(Ae).coeffs == center_relation(A).coeffs
    Ar = algebra(3, Character.regular(1))
    assert center_relation(Ar) == Poly.from_ints(Ar.field, [-1, 1, -2, 1])


def test_block_labels():
    A = algebra(5, Character.zero())
    labs = block_labels(A)
    assert [(l.omega, l.alpha) for l in labs] == [(0, 0), (1, 1), (2, 4)]
    A3 = algebra(3, Character.zero())
    assert [(l.omega, l.alpha) for l in block_labels(A3)] == [(0, 0), (1, 1)]
    Ar = algebra(3, Character.regular(1))
    labs_r = block_labels(Ar)
    t = Ar.field.t
    expect = sorted(int(Ar.field.mul[Ar.field.add[t, i], Ar.field.add[t, i]]) for i in range(3))
    assert [l.alpha for l in labs_r] == expect
    assert all(l.omega is None for l in labs_r)


def test_idempotent_polys_p5():
    A = algebra(5, Character.zero())
    labs = block_labels(A)
    # pi_0 = Phi/c = (c-1)^2 (c-4)^2
    lin1 = Poly.from_ints(A.field, [-1, 1])
    lin4 = Poly.from_ints(A.field, [-4, 1])
    assert idempotent_poly(A, labs[0]) == lin1 * lin1 * lin4 * lin4
    # values at the block scalars: 1 on own alpha, 0 on the others
    for lab in labs:
        q = idempotent_poly(A, lab)
        for other in labs:
            want = 1 if other.alpha == lab.alpha else 0
            assert q.evaluate(other.alpha) == want


@pytest.mark.parametrize(
    "p,chi",
    [(3, Character.zero()), (5, Character.zero()), (5, Character.nilpotent_e()),
     (3, Character.regular(1)), (5, Character.regular(2))],
    ids=str,
)
def test_idempotent_system(p, chi):
    A = algebra(p, chi)
    bs = get_blocks(A)
    total = A.zero_elem()
    for b in bs:
        assert A.mul(b.idempotent, b.idempotent) == b.idempotent
        for g in "efh":
            assert A.mul(b.idempotent, A.gen(g)) == A.mul(A.gen(g), b.idempotent)
        total = total + b.idempotent
    assert total == A.unit()
    for b1, b2 in itertools.combinations(bs, 2):
        assert A.mul(b1.idempotent, b2.idempotent).is_zero()
    if chi.kind == "regular":
        assert [b.dim for b in bs] == [p * p] * p
    else:
        assert [b.dim for b in bs] == [p * p] + [2 * p * p] * ((p - 1) // 2)
    assert sum(b.dim for b in bs) == p**3


def test_block_subspace_matches_generic_span_and_projection():
    A = algebra(5, Character.zero())
    for b in get_blocks(A):
        L = backend.left_mul_matrix(b.idempotent.vec, A)
        assert Subspace.span(A.field, L.T.copy()) == b.subspace
        # pi acts as identity on its block
        for row in b.subspace.basis[:5]:
            assert np.array_equal(matvec(L, row, A.field), row)


def test_blocks_ad_stable():
    A = algebra(5, Character.zero())
    for b in get_blocks(A):
        for g in "efh":
            ad = A.ad_matrix(g)
            for row in b.subspace.basis:
                assert b.subspace.contains(matvec(ad, row, A.field))


def test_coinvariants():
    A = algebra(5, Character.zero())
    bs = get_blocks(A)
    cos = [coinvariants(A, b) for b in bs]
    assert [c.dim for c in cos] == [1, 2, 2]
    assert all(c.squared_is_zero for c in cos)
    assert not np.any(cos[0].c_minus_alpha)
    assert np.any(cos[1].c_minus_alpha) and np.any(cos[2].c_minus_alpha)
    Ar = algebra(3, Character.regular(1))
    assert [coinvariants(Ar, b).dim for b in get_blocks(Ar)] == [1, 1, 1]
    Ae = algebra(5, Character.nilpotent_e())
    assert [coinvariants(Ae, b).dim for b in get_blocks(Ae)] == [1, 2, 2]


def test_weight_to_alpha_against_casimir_action():
    from sl2blocks.repdec import baby_verma

    for p in (3, 5, 7):
        A = algebra(p, Character.zero())
        for lam in range(p):
            assert weight_to_alpha(p, lam) == baby_verma(A, lam).casimir_scalar()
        # lam and p-2-lam are linked, the restricted Steinberg maps to 0
        for lam in range(p - 1):
            assert weight_to_alpha(p, lam) == weight_to_alpha(p, (p - 2 - lam) % p)
        assert weight_to_alpha(p, p - 1) == 0
    assert weight_to_alpha(5, 0) == weight_to_alpha(5, 3) == 1
    assert weight_to_alpha(5, 1) == weight_to_alpha(5, 2) == 4
    with pytest.raises(ValueError):
        weight_to_alpha(5, 5)


def test_invalid_label_rejected():
    A = algebra(5, Character.zero())
    from sl2blocks.blocks import BlockLabel

    with pytest.raises(ValueError):
        idempotent_poly(A, BlockLabel(A.chi, 2, None))  # 2 is a nonresidue mod 5
