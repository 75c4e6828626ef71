"""Block decomposition: image of the center, explicit central idempotents,
block subalgebras, and coinvariant algebras.

For the zero and nilpotent characters the blocks are indexed by the squares
alpha in F_p, displayed through omega with omega^2 = alpha and
0 <= omega <= (p-1)/2 (omega = 0 is the Steinberg block).  For the regular
character a*h/2 they are indexed by the p simple roots of the center
relation in F_{p^p}, ordered by coefficient vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .ffield import FieldElem, Poly, legendre
from .linalg import Subspace, matvec
from .pbw import Algebra, AlgElem, Character


@dataclass(frozen=True)
class BlockLabel:
    chi: Character
    alpha: int  # field code of the Casimir scalar on the block's simples
    omega: int | None  # square root display index; None for regular blocks

    def display(self, alg: Algebra) -> str:
        if self.omega is not None:
            return f"omega={self.omega}"
        return f"alpha={alg.field.format_code(self.alpha)}"


@dataclass(frozen=True)
class Coinvariants:
    """Image of the center in one block: spanned by the powers pi * c^k."""

    label: BlockLabel
    subspace: Subspace
    dim: int
    c_minus_alpha: np.ndarray  # pi*(c - alpha), zero iff dim == 1
    squared_is_zero: bool


class Block:
    """One block: label, central idempotent, and the subspace pi * U."""

    __slots__ = ("label", "idempotent", "poly", "subspace", "dim")

    def __init__(self, label, idempotent, poly, subspace):
        self.label = label
        self.idempotent = idempotent
        self.poly = poly
        self.subspace = subspace
        self.dim = subspace.dim

    def __repr__(self):
        return f"Block({self.label}, dim={self.dim})"


def center_relation(alg: Algebra) -> Poly:
    """The minimal relation of the Casimir image: c^p - 2c^{(p+1)/2} + c,
    minus a^2 for the regular character a*h/2."""
    p = alg.p
    coeffs = [0] * (p + 1)
    coeffs[p] = 1
    coeffs[(p + 1) // 2] = -2
    coeffs[1] += 1
    if alg.chi.kind == "regular":
        coeffs[0] = -(alg.chi.a**2)
    return Poly.from_ints(alg.field, coeffs)


def block_labels(alg: Algebra) -> list[BlockLabel]:
    chi = alg.chi
    if chi.kind in ("zero", "e"):
        return [
            BlockLabel(chi, (w * w) % alg.p, w) for w in range(0, (alg.p - 1) // 2 + 1)
        ]
    roots = center_relation(alg).roots_with_multiplicity()
    if len(roots) != alg.p or any(m != 1 for _, m in roots):
        raise AssertionError("center relation must have p simple roots")
    return [BlockLabel(chi, r, None) for r in sorted(r for r, _ in roots)]


def idempotent_poly(alg: Algebra, label: BlockLabel) -> Poly:
    """The block idempotent as a polynomial in the Casimir generator."""
    F = alg.field
    Phi = center_relation(alg)
    c = Poly.x(F)
    alpha = label.alpha
    lin = Poly.make(F, [int(F.neg[alpha]), 1])  # c - alpha
    if alg.chi.kind in ("zero", "e"):
        if label.omega is None or legendre(FieldElem(F, alpha)) < 0:
            raise ValueError(f"invalid block label {label}")
        if alpha == 0:
            return Phi.exact_divide(c)
        quot = Phi.exact_divide(lin * lin)
        two = 2 % alg.p
        lead = Poly.make(F, [int(F.mul[two, alpha]), two])  # 2(c + alpha)
        return lead * quot
    quot = Phi.exact_divide(lin)
    kappa = int(F.inv[quot.evaluate(alpha)])
    return quot.scale(kappa)


def idempotent(alg: Algebra, label: BlockLabel) -> AlgElem:
    return alg.eval_center_poly(idempotent_poly(alg, label))


def _column_space_by_weight(alg: Algebra, L: np.ndarray) -> Subspace:
    """Column space of an ad(h)-weight-preserving operator.

    Left multiplication by a weight-zero element maps each weight class of
    monomials into itself, so the column space splits over the classes and
    the global RREF is the pivot-sorted union of the per-class RREFs.
    """
    from .linalg import rref

    rows_out = []
    piv_out = []
    for w in range(alg.p):
        idx = np.nonzero(alg.hweight == w)[0]
        if idx.size == 0:
            continue
        sub = np.ascontiguousarray(L[np.ix_(idx, idx)].T)
        R, r, piv = rref(sub, alg.field)
        for t in range(r):
            row = np.zeros(alg.dim, dtype=np.int64)
            row[idx] = R[t]
            rows_out.append(row)
            piv_out.append(int(idx[piv[t]]))
    order = np.argsort(piv_out, kind="stable")
    rows = np.array([rows_out[t] for t in order], dtype=np.int64).reshape(len(rows_out), alg.dim)
    pivots = [piv_out[t] for t in order]
    return Subspace.from_rref_rows(alg.field, alg.dim, rows, pivots)


def block(alg: Algebra, label: BlockLabel) -> Block:
    pi = idempotent(alg, label)
    L = backend.left_mul_matrix(pi.vec, alg)
    sub = _column_space_by_weight(alg, L)
    return Block(label, pi, idempotent_poly(alg, label), sub)


_blocks_cache: dict = {}


def get_blocks(alg: Algebra) -> list[Block]:
    key = alg.key()
    if key not in _blocks_cache:
        _blocks_cache[key] = [block(alg, lab) for lab in block_labels(alg)]
    return _blocks_cache[key]


def get_block(alg: Algebra, label: BlockLabel) -> Block:
    for b in get_blocks(alg):
        if b.label == label:
            return b
    raise ValueError(f"no such block {label}")


def coinvariants(alg: Algebra, blk: Block) -> Coinvariants:
    """Span of {pi * c^k}; dimension 2 exactly when pi*(c-alpha) != 0."""
    F = alg.field
    Lc = alg.casimir_matrix()
    vecs = [blk.idempotent.vec]
    cur = blk.idempotent.vec
    for _ in range(alg.p):
        cur = matvec(Lc, cur, F)
        vecs.append(cur)
    sub = Subspace.span(F, np.array(vecs, dtype=np.int64))
    alpha = blk.label.alpha
    w1 = F.add[matvec(Lc, blk.idempotent.vec, F), F.mul[F.neg[alpha], blk.idempotent.vec]]
    w2 = F.add[matvec(Lc, w1, F), F.mul[F.neg[alpha], w1]]
    return Coinvariants(
        label=blk.label,
        subspace=sub,
        dim=sub.dim,
        c_minus_alpha=w1,
        squared_is_zero=not np.any(w2),
    )


def weight_to_alpha(p: int, lam: int) -> int:
    """Casimir scalar (lam+1)^2 of the highest weight lam, labeling its block."""
    if not 0 <= lam < p:
        raise ValueError("weight out of range")
    return (lam + 1) ** 2 % p
