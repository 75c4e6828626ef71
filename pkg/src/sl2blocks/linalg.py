"""Dense exact linear algebra and subspace calculus over the small fields.

Matrices are int64 numpy arrays of field codes; every routine takes the
field explicitly.  Subspaces are stored as reduced row echelon bases with
first-nonzero pivoting, which makes the representation canonical: equal
subspaces have bit-identical bases.
"""

from __future__ import annotations

import numpy as np

from . import backend
from .ffield import Field


def as_matrix(rows, field: Field, width: int | None = None) -> np.ndarray:
    M = np.asarray(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if width is None else M.reshape(-1, width)
    return M % field.q


def rref(M, field: Field):
    """Reduced row echelon form (copy) and pivot columns.

    Input entries are reduced into canonical codes first; the kernels index
    straight into the field tables and assume in-range values.
    """
    R = np.array(M, dtype=np.int64, copy=True) % field.q
    rank, piv = backend.rref_inplace(R, field)
    return R, rank, piv


def rank(M, field: Field) -> int:
    _, r, _ = rref(M, field)
    return r


def matmul(A, B, field: Field) -> np.ndarray:
    A = np.ascontiguousarray(np.asarray(A, dtype=np.int64) % field.q)
    B = np.ascontiguousarray(np.asarray(B, dtype=np.int64) % field.q)
    return backend.matmul(A, B, field)


def matvec(A, x, field: Field) -> np.ndarray:
    A = np.ascontiguousarray(np.asarray(A, dtype=np.int64) % field.q)
    x = np.ascontiguousarray(np.asarray(x, dtype=np.int64) % field.q)
    return backend.matvec(A, x, field)


class Subspace:
    """A subspace of field^ambient held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis: np.ndarray, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = tuple(int(c) for c in pivots)
        basis.flags.writeable = False

    @staticmethod
    def span(field: Field, vectors, ambient: int | None = None) -> "Subspace":
        M = np.asarray(vectors, dtype=np.int64) % field.q
        if M.ndim == 1:
            M = M.reshape(1, -1)
        n = M.shape[1] if ambient is None else ambient
        if M.size == 0:
            return Subspace.zero(field, n)
        R, r, piv = rref(M, field)
        return Subspace(field, n, R[:r].copy(), piv)

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, np.zeros((0, ambient), dtype=np.int64), ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, np.eye(ambient, dtype=np.int64), range(ambient))

    @staticmethod
    def from_rref_rows(field: Field, ambient: int, rows, pivots) -> "Subspace":
        """Adopt rows already known to be a valid RREF (e.g. assembled from
        blocks with disjoint column supports, sorted by pivot)."""
        return Subspace(field, ambient, np.asarray(rows, dtype=np.int64).copy(), pivots)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _chk(self, other: "Subspace"):
        if other.field is not self.field or other.ambient != self.ambient:
            raise ValueError("ambient space mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field is other.field
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self):
        return hash((id(self.field), self.ambient, self.basis.tobytes()))

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Residual of v after eliminating this subspace's pivot coordinates."""
        F = self.field
        w = np.array(v, dtype=np.int64, copy=True) % F.q
        for r, c in enumerate(self.pivots):
            coef = w[c]
            if coef:
                w = F.add[w, F.mul[F.neg[coef], self.basis[r]]]
        return w

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        self._chk(other)
        return all(self.contains(row) for row in other.basis)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of v in the RREF basis; v must lie in the subspace."""
        c = v[list(self.pivots)].astype(np.int64) if self.pivots else np.zeros(0, np.int64)
        if not np.array_equal(
            matvec(self.basis.T.copy(), c, self.field) if self.dim else np.zeros(self.ambient, np.int64),
            np.asarray(v, dtype=np.int64),
        ):
            raise ValueError("vector not in subspace")
        return c

    def __add__(self, other: "Subspace") -> "Subspace":
        self._chk(other)
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace.span(self.field, np.vstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coefficient system."""
        self._chk(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        stacked = np.vstack([self.basis, other.basis]).T.copy()
        K = kernel(stacked, self.field)
        if K.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        combo = matmul(K.basis[:, : self.dim], self.basis, self.field)
        return Subspace.span(self.field, combo, self.ambient)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field})"


def kernel(M, field: Field) -> Subspace:
    """Right kernel {v : M v = 0} as a canonical subspace."""
    M = np.asarray(M, dtype=np.int64) % field.q
    m, n = M.shape
    if m == 0:
        return Subspace.full(field, n)
    R, r, piv = rref(M, field)
    pivset = set(int(c) for c in piv)
    free = [c for c in range(n) if c not in pivset]
    if not free:
        return Subspace.zero(field, n)
    vecs = np.zeros((len(free), n), dtype=np.int64)
    for a, fc in enumerate(free):
        vecs[a, fc] = 1
        for i, pc in enumerate(piv):
            vecs[a, pc] = field.neg[R[i, fc]]
    return Subspace.span(field, vecs)


def solve(M, b, field: Field):
    """One solution of M x = b, or None if the system is inconsistent."""
    M = np.asarray(M, dtype=np.int64) % field.q
    b = np.asarray(b, dtype=np.int64) % field.q
    if M.shape[0] != b.shape[0]:
        raise ValueError("dimension mismatch")
    aug = np.hstack([M, b.reshape(-1, 1)])
    R, r, piv = rref(aug, field)
    n = M.shape[1]
    if any(int(c) == n for c in piv):
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, n]
    return x


def orth_complement(U: Subspace, G: np.ndarray) -> Subspace:
    """{v : b(v, u) = 0 for all u in U} for the bilinear form b(x, y) = x^T G y."""
    G = np.asarray(G, dtype=np.int64) % U.field.q
    if G.shape[0] != G.shape[1] or G.shape[0] != U.ambient:
        raise ValueError("Gram matrix incompatible with ambient space")
    if U.dim == 0:
        return Subspace.full(U.field, U.ambient)
    C = matmul(U.basis, G.T.copy(), U.field)
    return kernel(C, U.field)


def jordan_type_nilpotent(N, field: Field) -> list[int]:
    """Jordan block sizes of a nilpotent matrix, from ranks of powers.

    The number of blocks of size >= s is rank(N^{s-1}) - rank(N^s).
    """
    N = np.asarray(N, dtype=np.int64) % field.q
    n = N.shape[0]
    if N.shape[1] != n:
        raise ValueError("square matrix required")
    ranks = [n]
    P = N.copy()
    step = 0
    while True:
        step += 1
        r = rank(P, field)
        ranks.append(r)
        if r == 0:
            break
        if step > n:
            raise ValueError("matrix is not nilpotent")
        P = matmul(P, N, field)
    ranks.append(0)
    parts: list[int] = []
    for s in range(1, len(ranks) - 1):
        exact = (ranks[s - 1] - ranks[s]) - (ranks[s] - ranks[s + 1])
        parts.extend([s] * exact)
    parts.sort(reverse=True)
    return parts
