"""Modules, radical series, composition tallies, projectivity certificates."""

import numpy as np
import pytest

from sl2blocks import repdec as R
from sl2blocks.blocks import block_labels
from sl2blocks.pbw import Character, algebra


def test_simple_modules():
    A = algebra(5, Character.zero())
    L0 = R.simple_module(A, 0)
    assert L0.n == 1 and not np.any(L0.E) and not np.any(L0.F) and not np.any(L0.H)
    L1 = R.simple_module(A, 1)
    assert np.array_equal(L1.E, [[0, 1], [0, 0]])
    assert np.array_equal(L1.F, [[0, 0], [1, 0]])
    assert np.array_equal(L1.H, [[1, 0], [0, 4]])
    for lam in range(5):
        L = R.simple_module(A, lam)
        L.verify_relations()
        assert L.casimir_scalar() == (lam + 1) ** 2 % 5
    assert R.simple_module(A, 2).casimir_scalar() == 4
    with pytest.raises(ValueError):
        R.simple_module(A, 5)
    with pytest.raises(ValueError):
        R.simple_module(algebra(5, Character.nilpotent_e()), 1)


@pytest.mark.parametrize(
    "p,chi",
    [(5, Character.zero()), (5, Character.nilpotent_e()), (3, Character.regular(1))],
    ids=str,
)
def test_baby_verma_relations_and_casimir(p, chi):
    A = algebra(p, chi)
    F = A.field
    for lam in R.verma_weights(A):
        D = R.baby_verma(A, lam)
        D.verify_relations()
        lam1 = F.add[lam, 1]
        assert D.casimir_scalar() == int(F.mul[lam1, lam1])
    with pytest.raises(ValueError):
        R.baby_verma(A, A.field.q + 3)


def test_simple_module_is_its_own_tally():
    A = algebra(5, Character.zero())
    for lam in range(5):
        L = R.simple_module(A, lam)
        chain = R.radical_series(L, A)
        assert len(chain) == 2 and chain[1].dim == 0  # single semisimple layer
        assert R.composition_tally(L, A) == {lam: 1}


def test_baby_verma_tally_chi_zero():
    A = algebra(5, Character.zero())
    D3 = R.baby_verma(A, 3)
    chain = R.radical_series(D3, A)
    assert [a.dim - b.dim for a, b in zip(chain, chain[1:])] == [4, 1]
    assert R.composition_tally(D3, A) == {3: 1, 0: 1}
    # Steinberg baby Verma is simple
    D4 = R.baby_verma(A, 4)
    assert R.composition_tally(D4, A) == {4: 1}


def test_chi_e_baby_vermas_simple_and_isomorphic_pairs():
    A = algebra(5, Character.nilpotent_e())
    for lam, mod in R.simples_for(A):
        chain = R.radical_series(mod, A)
        assert len(chain) == 2 and chain[1].dim == 0
    # Delta_{e, lam} = Delta_{e, -lam-2}
    assert R.hom_dim(R.baby_verma(A, 0), R.baby_verma(A, 3)) == 1
    assert R.hom_dim(R.baby_verma(A, 0), R.baby_verma(A, 1)) == 0


def test_regular_simples_schur():
    A = algebra(3, Character.regular(1))
    mods = R.simples_for(A)
    assert len(mods) == 3
    for i, (_, Mi) in enumerate(mods):
        for j, (_, Mj) in enumerate(mods):
            assert R.hom_dim(Mi, Mj) == (1 if i == j else 0)


def test_algebra_radical_dims():
    assert R.algebra_radical(algebra(5, Character.zero())).dim == 70
    assert R.algebra_radical(algebra(3, Character.zero())).dim == 27 - 14
    assert R.algebra_radical(algebra(3, Character.regular(1))).dim == 0
    assert R.algebra_radical(algebra(3, Character.nilpotent_e())).dim == 9
    assert R.algebra_radical(algebra(5, Character.nilpotent_e())).dim == 50


@pytest.mark.parametrize(
    "p,chi",
    [(3, Character.zero()), (3, Character.nilpotent_e()), (3, Character.regular(1)),
     (5, Character.zero())],
    ids=str,
)
def test_radical_is_nilpotent_ideal(p, chi):
    ok, index = R.radical_is_nilpotent_ideal(algebra(p, chi))
    assert ok
    assert index <= 2 * p


def test_adjoint_modules_and_tallies_p5():
    A = algebra(5, Character.zero())
    labs = block_labels(A)
    adj0 = R.adjoint_module(A, labs[0])
    adj0.verify_relations()
    assert adj0.n == 25
    assert R.composition_tally(adj0, A) == {0: 2, 1: 2, 2: 2, 3: 2, 4: 1}
    assert R.expected_adjoint_tally(5, 0) == {0: 2, 1: 2, 2: 2, 3: 2, 4: 1}
    for lab in labs[1:]:
        adj = R.adjoint_module(A, lab)
        assert adj.n == 50
        assert R.composition_tally(adj, A) == R.expected_adjoint_tally(5, lab.omega)


def test_adjoint_invariants_p5():
    A = algebra(5, Character.zero())
    labs = block_labels(A)
    L0 = R.simple_module(A, 0)
    for lab, want in zip(labs, (1, 3, 3)):
        adj = R.adjoint_module(A, lab)
        assert R.hom_dim(L0, adj) == want
        assert R.invariants_dim(adj) == want
    # H-eigenvalue 0 multiplicity on the Steinberg block is p
    adj0 = R.adjoint_module(A, labs[0])
    from sl2blocks.linalg import kernel

    mult0 = kernel(adj0.H % 5, A.field).dim
    assert mult0 == 5


def test_projectivity_certificates():
    A = algebra(5, Character.zero())
    labs = block_labels(A)
    parts, ok = R.projectivity_certificate(R.adjoint_module(A, labs[0]))
    assert parts == [5] * 5 and ok
    for lam in range(4):
        parts, ok = R.projectivity_certificate(R.simple_module(A, lam))
        assert parts == [lam + 1] and not ok
    parts, ok = R.projectivity_certificate(R.simple_module(A, 4))
    assert parts == [5] and ok


def test_graded_piece_modules():
    A = algebra(5, Character.zero())
    labs = block_labels(A)
    gp0 = R.graded_piece_module(A, labs[1], "sh", 0)
    assert gp0.n == 1 and not np.any(gp0.E) and not np.any(gp0.H)
    gp = R.graded_piece_module(A, labs[2], "sh", 4, part="ideal")
    assert gp.n == 3
    assert R.composition_tally(gp, A) == {2: 1}
    gq = R.graded_piece_module(A, labs[1], "sh", 5, part="quotient")
    assert gq.n == 8
    from sl2blocks.linalg import kernel

    wm = {
        w: kernel((gq.H - w * np.eye(8, dtype=np.int64)) % 5, A.field).dim
        for w in range(5)
    }
    assert wm == {0: 0, 1: 2, 2: 2, 3: 2, 4: 2}  # weight multiset of L_8 mod 5


def test_expected_adjoint_tally_consistency():
    # the predicted tallies must account for the full block dimension
    for p in (3, 5, 7, 11):
        for omega in range((p - 1) // 2 + 1):
            tal = R.expected_adjoint_tally(p, omega)
            total = sum(m * (lam + 1) for lam, m in tal.items())
            assert total == (p * p if omega == 0 else 2 * p * p)


def test_hom_dim_mismatch_raises():
    A = algebra(5, Character.zero())
    B = algebra(5, Character.nilpotent_e())
    with pytest.raises(ValueError):
        R.hom_dim(R.simple_module(A, 1), R.baby_verma(B, 1))
