"""The reduced enveloping algebra of sl2 for one p-character.

Elements are coefficient vectors over the monomial basis e^i f^j h^k with
0 <= i, j, k < p, indexed by i*p^2 + j*p + k.  Multiplication normal-orders
products with the commutation rules

    [e, f] = h,   [h, e] = 2e,   [h, f] = -2f,

reducing p-th powers eagerly by the character's defining relations:
e^p = 0 always; f^p = 0 except f^p = 1 for the nilpotent character;
h^p = h, or h^p = h + a for the regular character a*h/2.

The regular character works over the Artin-Schreier extension F_{p^p} so
that block scalars exist; the other characters stay over F_p.  Algebras and
their cached structure tables are immutable once built, so instances are
safe to share across threads.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import backend
from .ffield import (
    DEFAULT_MAX_P,
    MAX_REGULAR_P,
    Field,
    Poly,
    artin_schreier_field,
    check_prime,
    prime_field,
)

E, F, H = 0, 1, 2
GEN_NAMES = {"e": E, "f": F, "h": H}


@dataclass(frozen=True)
class Character:
    """p-character up to conjugacy: zero, nilpotent (e), or regular (a*h/2)."""

    kind: str
    a: int = 0

    def __post_init__(self):
        if self.kind not in ("zero", "e", "regular"):
            raise ValueError(f"unknown character kind {self.kind!r}")
        if self.kind == "regular" and self.a == 0:
            raise ValueError("regular character needs a != 0")
        if self.kind != "regular" and self.a != 0:
            raise ValueError("only the regular character carries a parameter")

    @staticmethod
    def zero() -> "Character":
        return Character("zero")

    @staticmethod
    def nilpotent_e() -> "Character":
        return Character("e")

    @staticmethod
    def regular(a: int) -> "Character":
        return Character("regular", a)

    def __str__(self):
        return f"regular(a={self.a})" if self.kind == "regular" else self.kind


def _binom_mod(p: int) -> np.ndarray:
    C = np.zeros((p + 1, p + 1), dtype=np.int64)
    for n in range(p + 1):
        C[n, 0] = 1
        for k in range(1, n + 1):
            C[n, k] = (C[n - 1, k - 1] + C[n - 1, k]) % p
    return C


class Algebra:
    """Multiplication context for one (p, character) pair."""

    def __init__(self, p: int, chi: Character, max_p: int = DEFAULT_MAX_P):
        check_prime(p, max_p)
        self.p = p
        self.chi = chi
        if chi.kind == "regular":
            if p > MAX_REGULAR_P:
                raise ValueError(
                    f"regular characters supported for p <= {MAX_REGULAR_P} only"
                )
            self.field: Field = artin_schreier_field(p, chi.a % p)
            self.hshift = chi.a % p  # h^p = h + a
        else:
            self.field = prime_field(p, max_p)
            self.hshift = 0
        self.echar = 1 if chi.kind == "e" else 0
        self.dim = p**3

        ii, jj, kk = np.meshgrid(np.arange(p), np.arange(p), np.arange(p), indexing="ij")
        self.mono_deg = (ii + jj + kk).reshape(-1).astype(np.int64)
        self.hweight = ((2 * (ii - jj)) % p).reshape(-1).astype(np.int64)

        C = _binom_mod(p)
        rhf = np.zeros((p, p), dtype=np.int64)  # (h-2)^c -> sum rhf[c,r] h^r
        rhe = np.zeros((p, p), dtype=np.int64)  # (h+2)^c -> sum rhe[c,r] h^r
        for c in range(p):
            for r in range(c + 1):
                rhf[c, r] = C[c, r] * pow(-2 % p, c - r, p) % p
                rhe[c, r] = C[c, r] * pow(2, c - r, p) % p
        # reb[b, c, r]: coefficient of e^i f^{b-1} h^r in (e^i f^b h^c) * e,
        # i.e. -b * (h + 1 - b) * (h+2)^c with h^p folded to h + hshift.
        reb = np.zeros((p, p, p), dtype=np.int64)
        for b in range(1, p):
            for c in range(p):
                q = [0] * (p + 1)
                for r in range(c + 1):
                    q[r + 1] = (q[r + 1] + rhe[c, r]) % p
                    q[r] = (q[r] + (1 - b) * rhe[c, r]) % p
                if q[p]:
                    q[1] = (q[1] + q[p]) % p
                    q[0] = (q[0] + self.hshift * q[p]) % p
                for r in range(p):
                    reb[b, c, r] = (-b) * q[r] % p
        self.rhf, self.rhe, self.reb = rhf, rhe, reb
        for t in (self.mono_deg, self.hweight, rhf, rhe, reb):
            t.flags.writeable = False

        self._cas: AlgElem | None = None
        self._cas_mat: np.ndarray | None = None
        self._ad: dict[int, np.ndarray] = {}
        self._gram: np.ndarray | None = None

    # -- element constructors ------------------------------------------------

    def key(self):
        return (self.p, self.chi)

    def index(self, i: int, j: int, k: int) -> int:
        return (i * self.p + j) * self.p + k

    def zero_elem(self) -> "AlgElem":
        return AlgElem(self, np.zeros(self.dim, dtype=np.int64))

    def unit(self) -> "AlgElem":
        v = np.zeros(self.dim, dtype=np.int64)
        v[0] = 1
        return AlgElem(self, v)

    def monomial(self, i: int, j: int, k: int, coeff: int = 1) -> "AlgElem":
        if not (0 <= i < self.p and 0 <= j < self.p and 0 <= k < self.p):
            raise ValueError("monomial exponents out of range")
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index(i, j, k)] = coeff % self.field.q
        return AlgElem(self, v)

    def gen(self, name: str) -> "AlgElem":
        g = GEN_NAMES[name]
        return self.monomial(*{E: (1, 0, 0), F: (0, 1, 0), H: (0, 0, 1)}[g])

    def from_dict(self, d: dict) -> "AlgElem":
        """Element from {(i, j, k): integer coefficient}."""
        v = np.zeros(self.dim, dtype=np.int64)
        Fld = self.field
        for (i, j, k), c in d.items():
            t = self.index(i, j, k)
            v[t] = Fld.add[v[t], Fld.of_int(int(c))]
        return AlgElem(self, v)

    def elem(self, vec: np.ndarray) -> "AlgElem":
        v = np.asarray(vec, dtype=np.int64)
        if v.shape != (self.dim,):
            raise ValueError("coefficient vector has wrong length")
        return AlgElem(self, v % self.field.q)

    # -- multiplication ------------------------------------------------------

    def mul(self, u: "AlgElem", v: "AlgElem") -> "AlgElem":
        if u.algebra.key() != self.key() or v.algebra.key() != self.key():
            raise ValueError("character mismatch in multiplication")
        return AlgElem(self, backend.alg_mul(u.vec, v.vec, self))

    def left_mul_matrix(self, u: "AlgElem") -> np.ndarray:
        return backend.left_mul_matrix(u.vec, self)

    # -- distinguished elements and operators ---------------------------------

    def casimir(self) -> "AlgElem":
        """The central element (h-1)^2 + 4ef = h^2 - 2h + 1 + 4ef."""
        if self._cas is None:
            d = {
                (0, 0, 2): 1,
                (0, 0, 1): (-2) % self.p,
                (0, 0, 0): 1,
                (1, 1, 0): 4 % self.p,
            }
            v = np.zeros(self.dim, dtype=np.int64)
            for ijk, c in d.items():
                v[self.index(*ijk)] = c
            self._cas = AlgElem(self, v)
        return self._cas

    def expand_left(self, gen: int, i: int, j: int, k: int) -> dict[int, int]:
        """g * e^i f^j h^k as {index: prime-subfield code}; the pure-python
        reference for the kernel formulas."""
        p, s = self.p, self.hshift
        out: dict[int, int] = {}

        def emit(ii, jj, kk, c):
            c %= p
            if c:
                t = self.index(ii, jj, kk)
                out[t] = (out.get(t, 0) + c) % p

        def emit_h(ii, jj, kk, c):
            # e^ii f^jj h^kk with kk possibly = p
            if kk < p:
                emit(ii, jj, kk, c)
            else:
                emit(ii, jj, 1, c)
                emit(ii, jj, 0, c * s)

        if gen == H:
            emit_h(i, j, k + 1, 1)
            emit(i, j, k, 2 * (i - j))
        elif gen == E:
            # e prepends to the leading e-block: a pure shift, e^p = 0
            if i + 1 < p:
                emit(i + 1, j, k, 1)
        else:
            if j + 1 < p:
                emit(i, j + 1, k, 1)
            elif self.echar:
                emit(i, 0, k, 1)
            if i > 0:
                emit_h(i - 1, j, k + 1, -i)
                emit(i - 1, j, k, -i * (i - 1 - 2 * j))
        return {t: c for t, c in out.items() if c}

    def expand_right(self, gen: int, i: int, j: int, k: int) -> dict[int, int]:
        """e^i f^j h^k * g as {index: prime-subfield code}."""
        p = self.p
        out: dict[int, int] = {}

        def emit(t, c):
            c %= p
            if c:
                out[t] = (out.get(t, 0) + c) % p

        if gen == H:
            if k + 1 < p:
                emit(self.index(i, j, k + 1), 1)
            else:
                emit(self.index(i, j, 1), 1)
                emit(self.index(i, j, 0), self.hshift)
        elif gen == F:
            if j + 1 < p:
                jt = j + 1
            elif self.echar:
                jt = 0
            else:
                return {}
            for r in range(k + 1):
                emit(self.index(i, jt, r), int(self.rhf[k, r]))
        else:
            if i + 1 < p:
                for r in range(k + 1):
                    emit(self.index(i + 1, j, r), int(self.rhe[k, r]))
            if j > 0:
                for r in range(p):
                    emit(self.index(i, j - 1, r), int(self.reb[j, k, r]))
        return {t: c for t, c in out.items() if c}

    def ad_matrix(self, name: str) -> np.ndarray:
        """Matrix of u -> x u - u x on the monomial basis, x in {e, f, h}."""
        g = GEN_NAMES[name]
        if g not in self._ad:
            p = self.p
            M = np.zeros((self.dim, self.dim), dtype=np.int64)
            for i in range(p):
                for j in range(p):
                    for k in range(p):
                        col = self.index(i, j, k)
                        acc: dict[int, int] = {}
                        for t, c in self.expand_left(g, i, j, k).items():
                            acc[t] = (acc.get(t, 0) + c) % p
                        for t, c in self.expand_right(g, i, j, k).items():
                            acc[t] = (acc.get(t, 0) - c) % p
                        for t, c in acc.items():
                            if c:
                                M[t, col] = c
            M.flags.writeable = False
            self._ad[g] = M
        return self._ad[g]

    def casimir_matrix(self) -> np.ndarray:
        """Left multiplication by the Casimir element."""
        if self._cas_mat is None:
            p = self.p
            M = np.zeros((self.dim, self.dim), dtype=np.int64)
            for i in range(p):
                for j in range(p):
                    for k in range(p):
                        col = self.index(i, j, k)
                        acc: dict[int, int] = {(self.index(i, j, k)): 1}
                        hm = self.expand_left(H, i, j, k)
                        for t, c in hm.items():
                            acc[t] = (acc.get(t, 0) - 2 * c) % p
                            ti, tj, tk = t // (p * p), t // p % p, t % p
                            for t2, c2 in self.expand_left(H, ti, tj, tk).items():
                                acc[t2] = (acc.get(t2, 0) + c * c2) % p
                        for t, c in self.expand_left(F, i, j, k).items():
                            ti, tj, tk = t // (p * p), t // p % p, t % p
                            for t2, c2 in self.expand_left(E, ti, tj, tk).items():
                                acc[t2] = (acc.get(t2, 0) + 4 * c * c2) % p
                        for t, c in acc.items():
                            c %= p
                            if c:
                                M[t, col] = c
            M.flags.writeable = False
            self._cas_mat = M
        return self._cas_mat

    def eval_center_poly(self, q: Poly) -> "AlgElem":
        """q(casimir), by Horner's rule through the left-Casimir matrix."""
        if q.field is not self.field:
            raise ValueError("polynomial over the wrong field")
        L = self.casimir_matrix()
        Fld = self.field
        vec = np.zeros(self.dim, dtype=np.int64)
        for c in reversed(q.coeffs):
            vec = backend.matvec(L, vec, Fld)
            vec[0] = Fld.add[vec[0], c]
        return AlgElem(self, vec)

    def gram_matrix(self) -> np.ndarray:
        """Gram matrix of the trace form b(u, v) = top coefficient of u*v."""
        if self._gram is None:
            B = backend.gram(self)
            B.flags.writeable = False
            self._gram = B
        return self._gram

    # -- PBW filtration on the whole algebra ----------------------------------

    def top_degree(self) -> int:
        return 3 * (self.p - 1)

    def pbw_indices(self, d: int) -> np.ndarray:
        return np.nonzero(self.mono_deg <= d)[0]

    def pbw_subspace(self, d: int):
        """Span of monomials of total degree <= d (canonical RREF directly)."""
        from .linalg import Subspace

        if d < 0:
            return Subspace.zero(self.field, self.dim)
        idx = self.pbw_indices(d)
        rows = np.zeros((len(idx), self.dim), dtype=np.int64)
        rows[np.arange(len(idx)), idx] = 1
        return Subspace.from_rref_rows(self.field, self.dim, rows, idx)

    def __repr__(self):
        return f"Algebra(p={self.p}, chi={self.chi})"


@functools.lru_cache(maxsize=None)
def algebra(p: int, chi: Character) -> Algebra:
    return Algebra(p, chi)


class AlgElem:
    """An element of the algebra: an immutable coefficient vector."""

    __slots__ = ("algebra", "vec")

    def __init__(self, alg: Algebra, vec: np.ndarray):
        self.algebra = alg
        self.vec = vec
        vec.flags.writeable = False

    def _chk(self, other: "AlgElem"):
        if other.algebra.key() != self.algebra.key():
            raise ValueError("character mismatch")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._chk(other)
        Fld = self.algebra.field
        return AlgElem(self.algebra, Fld.add[self.vec, other.vec])

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        self._chk(other)
        Fld = self.algebra.field
        return AlgElem(self.algebra, Fld.add[self.vec, Fld.neg[other.vec]])

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.algebra, self.algebra.field.neg[self.vec])

    def scale(self, c: int) -> "AlgElem":
        Fld = self.algebra.field
        return AlgElem(self.algebra, Fld.mul[c % Fld.q, self.vec])

    def __mul__(self, other: "AlgElem") -> "AlgElem":
        return self.algebra.mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.algebra.key() == other.algebra.key() and bool(
            np.array_equal(self.vec, other.vec)
        )

    def __hash__(self):
        return hash((self.algebra.key(), self.vec.tobytes()))

    def is_zero(self) -> bool:
        return not np.any(self.vec)

    def degree(self) -> int:
        nz = np.nonzero(self.vec)[0]
        if nz.size == 0:
            return -1
        return int(self.algebra.mono_deg[nz].max())

    def support(self):
        p = self.algebra.p
        out = []
        for t in np.nonzero(self.vec)[0]:
            t = int(t)
            out.append((t // (p * p), t // p % p, t % p, int(self.vec[t])))
        return out

    def pow(self, k: int) -> "AlgElem":
        r = self.algebra.unit()
        for _ in range(k):
            r = self.algebra.mul(r, self)
        return r

    def __repr__(self):
        terms = []
        Fld = self.algebra.field
        for i, j, k, c in self.support()[:8]:
            mono = "".join(
                f"{s}^{x}" if x > 1 else s
                for s, x in (("e", i), ("f", j), ("h", k))
                if x > 0
            )
            cs = Fld.format_code(c)
            terms.append(f"{cs}*{mono}" if mono else cs)
        if len(self.support()) > 8:
            terms.append("...")
        return " + ".join(terms) if terms else "0"
