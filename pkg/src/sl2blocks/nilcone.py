"""The graded ring of the Frobenius neighborhood of 0 in the nilpotent cone.

Concretely k[x_a, x_b, x_c] / <x_a^2 + x_b*x_c, x_a^p, x_b^p, x_c^p>, where
the coordinates respond to torus weights 0, +2, -2.  Graded dimensions are
computed two independent ways: degree-by-degree linear algebra on the
relation span (the oracle) and the closed form 1, 3, ..., 2p-1, 2p-2,
2p-6, ..., 4.  The total dimension is p^2 + (p^2 - 1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ffield import check_prime, prime_field
from .linalg import rref


def _monomials(d: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, d - a - b) for a in range(d + 1) for b in range(d - a + 1)
    ]


def _generators(p: int):
    return [
        {(2, 0, 0): 1, (0, 1, 1): 1},  # x_a^2 + x_b x_c
        {(p, 0, 0): 1},
        {(0, p, 0): 1},
        {(0, 0, p): 1},
    ]


@dataclass(frozen=True)
class NilconeRing:
    """Per-degree data of the quotient ring: standard-monomial bases,
    dimensions, and weight multiplicity maps."""

    p: int
    dims: tuple[int, ...]
    bases: tuple[tuple[tuple[int, int, int], ...], ...]
    weights: tuple[dict, ...]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def _degree_data(p: int, d: int):
    monos = _monomials(d)
    index = {m: t for t, m in enumerate(monos)}
    rows = []
    for gen in _generators(p):
        gdeg = sum(next(iter(gen)))
        if d < gdeg:
            continue
        for m in _monomials(d - gdeg):
            row = np.zeros(len(monos), dtype=np.int64)
            for term, coeff in gen.items():
                tgt = (m[0] + term[0], m[1] + term[1], m[2] + term[2])
                row[index[tgt]] = coeff % p
            rows.append(row)
    F = prime_field(p)
    if rows:
        R, rank_, piv = rref(np.array(rows, dtype=np.int64), F)
        pivset = set(int(c) for c in piv)
    else:
        pivset = set()
    basis = tuple(m for t, m in enumerate(monos) if t not in pivset)
    return basis


def nilcone_ring(p: int) -> NilconeRing:
    check_prime(p)
    top = 3 * (p - 1) // 2
    bases = []
    dims = []
    weights = []
    for d in range(top + 2):  # one degree past the expected vanishing point
        basis = _degree_data(p, d)
        if d == top + 1:
            if basis:
                raise AssertionError("quotient must vanish beyond degree 3(p-1)/2")
            break
        bases.append(basis)
        dims.append(len(basis))
        wt: dict[int, int] = {}
        for (_, b, c) in basis:
            w = (2 * b - 2 * c) % p
            wt[w] = wt.get(w, 0) + 1
        weights.append(wt)
    return NilconeRing(p, tuple(dims), tuple(bases), tuple(weights))


def nilcone_dims_oracle(p: int) -> list[int]:
    """Graded dimensions by explicit linear algebra on the relation span."""
    return list(nilcone_ring(p).dims)


def nilcone_dims_closed(p: int) -> list[int]:
    """Closed-form graded dimensions: 2d+1 below degree p, then the simple
    module dimensions 2(3p - 2d - 1) through degree 3(p-1)/2."""
    check_prime(p)
    out = [2 * d + 1 for d in range(p)]
    for d in range(p, 3 * (p - 1) // 2 + 1):
        out.append(2 * (3 * p - 2 * d - 1))
    return out


def nilcone_weights(p: int, d: int) -> dict[int, int]:
    """Torus weight multiplicities (mod p) of the degree-d component."""
    ring = nilcone_ring(p)
    if d >= len(ring.weights):
        return {}
    return dict(ring.weights[d])


def compare_block_quotient(alg, label) -> dict:
    """Degree-by-degree comparison of gr_sh(A / <c - alpha>) with the
    nilcone ring truncated below degree p + omega: dimensions and
    ad(h)-weight multisets must agree exactly."""
    from .filt import quotient_graded_dims, quotient_graded_weights

    if alg.chi.kind != "zero":
        raise ValueError("block-quotient comparison runs at the zero character")
    p = alg.p
    omega = label.omega
    ring = nilcone_ring(p)
    qdims = quotient_graded_dims(alg, label)
    qweights = quotient_graded_weights(alg, label)
    cut = p + omega
    exp_dims = [ring.dims[d] if d < min(cut, len(ring.dims)) else 0 for d in range(len(qdims))]
    first_fail = None
    for d in range(len(qdims)):
        exp_w = dict(ring.weights[d]) if d < min(cut, len(ring.weights)) else {}
        if qdims[d] != exp_dims[d] or qweights[d] != exp_w:
            first_fail = d
            break
    return {
        "label": label,
        "ok": first_fail is None,
        "first_failing_degree": first_fail,
        "quotient_dims": qdims,
        "expected_dims": exp_dims,
        "total": sum(qdims),
        "expected_total": p * p + 2 * omega * (p - omega),
    }
