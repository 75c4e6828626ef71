"""Explicit modules and decomposition data: simples, baby Vermas, the
adjoint representation of a block, radical series, hom spaces, composition
multiplicities, and Jordan-type projectivity certificates.

A module is a triple of exact matrices (E, F, H) over the algebra's field
satisfying the sl2 relations and the character's p-th power relations.
Composition multiplicities are computed from radical layers with exact
intertwiner solves; weight counts alone would not separate the simples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .blocks import BlockLabel, get_block
from .ffield import Poly
from .linalg import Subspace, kernel, matmul, matvec, rank, jordan_type_nilpotent
from .pbw import Algebra


@dataclass
class ModuleAction:
    """Action matrices of e, f, h on a finite-dimensional module."""

    algebra: Algebra
    n: int
    E: np.ndarray
    F: np.ndarray
    H: np.ndarray

    def verify_relations(self) -> None:
        """Exact check of the defining and p-th power relations."""
        alg = self.algebra
        Fld = alg.field
        p = alg.p

        def comm(A, B):
            return Fld.add[matmul(A, B, Fld), Fld.neg[matmul(B, A, Fld)]]

        two = Fld.of_int(2)
        if not np.array_equal(comm(self.H, self.E), Fld.mul[two, self.E]):
            raise AssertionError("[h, e] != 2e")
        if not np.array_equal(comm(self.H, self.F), Fld.mul[Fld.neg[two], self.F]):
            raise AssertionError("[h, f] != -2f")
        if not np.array_equal(comm(self.E, self.F), self.H):
            raise AssertionError("[e, f] != h")

        def mpow(A, k):
            R = np.eye(self.n, dtype=np.int64)
            for _ in range(k):
                R = matmul(R, A, Fld)
            return R

        eye = np.eye(self.n, dtype=np.int64)
        if np.any(mpow(self.E, p)):
            raise AssertionError("e^p != 0")
        fp = mpow(self.F, p)
        if alg.chi.kind == "e":
            if not np.array_equal(fp, eye):
                raise AssertionError("f^p != 1")
        elif np.any(fp):
            raise AssertionError("f^p != 0")
        hp = mpow(self.H, p)
        want = self.H
        if alg.chi.kind == "regular":
            want = Fld.add[self.H, Fld.mul[Fld.of_int(alg.chi.a), eye]]
        if not np.array_equal(hp, want):
            raise AssertionError("h^p relation fails")

    def monomial_actions(self) -> np.ndarray:
        """Action matrices of every basis monomial, shape (p^3, n, n)."""
        return backend.rep_tensor(self.E, self.F, self.H, self.algebra.p, self.algebra.field)

    def action_of(self, vec: np.ndarray, tensor: np.ndarray | None = None) -> np.ndarray:
        """Action matrix of an algebra element given by its coefficient vector."""
        Fld = self.algebra.field
        T = self.monomial_actions() if tensor is None else tensor
        if Fld.is_prime:
            return np.tensordot(vec, T, axes=(0, 0)) % Fld.p
        acc = np.zeros((self.n, self.n), dtype=np.int64)
        for m in np.nonzero(vec)[0]:
            acc = Fld.add[acc, Fld.mul[vec[m], T[m]]]
        return acc

    def casimir_scalar(self) -> int:
        """The scalar by which the Casimir acts on the first basis vector,
        checked to act by that scalar everywhere (raises otherwise)."""
        Fld = self.algebra.field
        C = self.action_of(self.algebra.casimir().vec)
        s = int(C[0, 0])
        if not np.array_equal(C, Fld.mul[s, np.eye(self.n, dtype=np.int64)]):
            raise AssertionError("Casimir does not act by a scalar")
        return s


def simple_module(alg: Algebra, lam: int) -> ModuleAction:
    """The (lam+1)-dimensional simple module at the zero character:
    h v_i = (lam - 2i) v_i, f v_i = v_{i+1}, e v_i = i(lam + 1 - i) v_{i-1}."""
    if alg.chi.kind != "zero":
        raise ValueError("simple_module constructs zero-character simples")
    if not 0 <= lam < alg.p:
        raise ValueError("highest weight out of range")
    Fld = alg.field
    n = lam + 1
    E = np.zeros((n, n), dtype=np.int64)
    F = np.zeros((n, n), dtype=np.int64)
    H = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        H[i, i] = Fld.of_int(lam - 2 * i)
        if i + 1 < n:
            F[i + 1, i] = 1
        if i > 0:
            E[i - 1, i] = Fld.of_int(i * (lam + 1 - i))
    return ModuleAction(alg, n, E, F, H)


def verma_weights(alg: Algebra) -> list[int]:
    """Admissible highest weights (field codes) for baby Vermas."""
    if alg.chi.kind in ("zero", "e"):
        return list(range(alg.p))
    # roots of x^p - x - a in the extension: exactly t + i for i in F_p
    coeffs = [0] * (alg.p + 1)
    coeffs[0] = -alg.chi.a
    coeffs[1] = -1
    coeffs[alg.p] = 1
    pol = Poly.from_ints(alg.field, coeffs)
    roots = [r for r, m in pol.roots_with_multiplicity()]
    if len(roots) != alg.p:
        raise AssertionError("x^p - x - a must split in F_{p^p}")
    return sorted(roots)


def baby_verma(alg: Algebra, lam: int) -> ModuleAction:
    """The p-dimensional module induced from the highest weight lam; f acts
    cyclically (with f^p = 1 at the nilpotent character)."""
    Fld = alg.field
    p = alg.p
    if lam not in verma_weights(alg):
        raise ValueError(f"invalid highest weight {lam} for {alg.chi}")
    E = np.zeros((p, p), dtype=np.int64)
    F = np.zeros((p, p), dtype=np.int64)
    H = np.zeros((p, p), dtype=np.int64)
    lam_plus_1 = Fld.add[lam, 1]
    for i in range(p):
        H[i, i] = Fld.add[lam, Fld.of_int(-2 * i)]
        if i + 1 < p:
            F[i + 1, i] = 1
        elif alg.chi.kind == "e":
            F[0, p - 1] = 1
        if i > 0:
            ci = Fld.of_int(i)
            E[i - 1, i] = Fld.mul[ci, Fld.add[lam_plus_1, Fld.neg[ci]]]
    return ModuleAction(alg, p, E, F, H)


def adjoint_module(alg: Algebra, label: BlockLabel) -> ModuleAction:
    """The adjoint action of the generators restricted to a block subspace
    (zero character; the block is ad-stable)."""
    if alg.chi.kind != "zero":
        raise ValueError("adjoint block modules are taken at the zero character")
    blk = get_block(alg, label)
    A = blk.subspace
    mats = []
    for name in ("e", "f", "h"):
        ad = alg.ad_matrix(name)
        M = np.zeros((A.dim, A.dim), dtype=np.int64)
        for r in range(A.dim):
            w = matvec(ad, A.basis[r], alg.field)
            if not A.contains(w):
                raise AssertionError("block not ad-stable")
            M[:, r] = w[list(A.pivots)]
        mats.append(M)
    return ModuleAction(alg, A.dim, mats[0], mats[1], mats[2])


def simples_for(alg: Algebra) -> list[tuple[object, ModuleAction]]:
    """Representatives of the isomorphism classes of simple modules."""
    if alg.chi.kind == "zero":
        return [(lam, simple_module(alg, lam)) for lam in range(alg.p)]
    if alg.chi.kind == "e":
        reps = [w - 1 for w in range(1, (alg.p - 1) // 2 + 1)] + [alg.p - 1]
        return [(lam, baby_verma(alg, lam)) for lam in sorted(reps)]
    return [(lam, baby_verma(alg, lam)) for lam in verma_weights(alg)]


_radical_cache: dict = {}


def algebra_radical(alg: Algebra) -> Subspace:
    """The radical as the kernel of the map into the product of matrix
    algebras over all simples."""
    key = alg.key()
    if key in _radical_cache:
        return _radical_cache[key]
    blocks_rows = []
    for _, mod in simples_for(alg):
        T = mod.monomial_actions()
        blocks_rows.append(T.reshape(alg.dim, -1).T)
    M = np.ascontiguousarray(np.vstack(blocks_rows))
    rad = kernel(M, alg.field)
    _radical_cache[key] = rad
    return rad


def radical_is_nilpotent_ideal(alg: Algebra, max_power: int | None = None) -> tuple[bool, int]:
    """Verify the radical is a two-sided ideal and nilpotent; returns
    (ok, nilpotency index)."""
    rad = algebra_radical(alg)
    if rad.dim == 0:
        return True, 1
    for name in ("e", "f", "h"):
        for side in ("l", "r"):
            for row in rad.basis:
                img = (
                    backend.gen_left(row.copy(), {"e": 0, "f": 1, "h": 2}[name], alg)
                    if side == "l"
                    else backend.gen_right(row.copy(), {"e": 0, "f": 1, "h": 2}[name], alg)
                )
                if not rad.contains(img):
                    return False, 0
    limit = max_power or 2 * alg.p
    Ls = [backend.left_mul_matrix(np.ascontiguousarray(r), alg) for r in rad.basis]
    cur = rad
    for k in range(2, limit + 2):
        rows = np.vstack([matmul(L, cur.basis.T.copy(), alg.field).T for L in Ls])
        cur = Subspace.span(alg.field, rows, alg.dim)
        if cur.dim == 0:
            return True, k
    return False, 0


def radical_series(mod: ModuleAction, alg: Algebra) -> list[Subspace]:
    """Descending chain M >= rad M >= rad^2 M >= ... >= 0 (as subspaces)."""
    rad = algebra_radical(alg)
    Fld = alg.field
    chain = [Subspace.full(Fld, mod.n)]
    if rad.dim == 0:
        chain.append(Subspace.zero(Fld, mod.n))
        return chain
    T = mod.monomial_actions()
    rad_mats = [mod.action_of(r, T) for r in rad.basis]
    cur = chain[0]
    while cur.dim > 0:
        rows = np.vstack([matmul(R, cur.basis.T.copy(), Fld).T for R in rad_mats])
        nxt = Subspace.span(Fld, rows, mod.n)
        if nxt.dim >= cur.dim:
            raise AssertionError("radical series does not descend")
        chain.append(nxt)
        cur = nxt
    return chain


def quotient_action(mod: ModuleAction, total: Subspace, sub: Subspace) -> ModuleAction:
    """The induced module on total/sub; both must be invariant subspaces."""
    Fld = mod.algebra.field
    red_rows = [sub.reduce(r) for r in total.basis]
    comp = Subspace.span(Fld, np.array(red_rows, dtype=np.int64), total.ambient)
    mats = []
    for G in (mod.E, mod.F, mod.H):
        M = np.zeros((comp.dim, comp.dim), dtype=np.int64)
        for r in range(comp.dim):
            w = sub.reduce(matvec(G, comp.basis[r], Fld))
            if not comp.contains(w):
                raise AssertionError("subspace not invariant")
            M[:, r] = w[list(comp.pivots)] if comp.dim else w[:0]
        mats.append(M)
    return ModuleAction(mod.algebra, comp.dim, mats[0], mats[1], mats[2])


def _field_kron(A: np.ndarray, B: np.ndarray, field) -> np.ndarray:
    if field.is_prime:
        return np.kron(A, B) % field.p
    m, n = A.shape
    r, c = B.shape
    out = field.mul[A[:, None, :, None], B[None, :, None, :]]
    return out.reshape(m * r, n * c)


def hom_dim(M: ModuleAction, N: ModuleAction) -> int:
    """Dimension of the intertwiner space Hom(M, N), by solving
    X E_M = E_N X (and f, h) exactly."""
    if M.algebra.key() != N.algebra.key():
        raise ValueError("modules over different algebras")
    Fld = M.algebra.field
    eyeM = np.eye(M.n, dtype=np.int64)
    eyeN = np.eye(N.n, dtype=np.int64)
    rows = []
    for GM, GN in ((M.E, N.E), (M.F, N.F), (M.H, N.H)):
        lhs = _field_kron(eyeN, GM.T.copy(), Fld)
        rhs = _field_kron(GN, eyeM, Fld)
        rows.append(Fld.add[lhs, Fld.neg[rhs]])
    K = np.ascontiguousarray(np.vstack(rows))
    return M.n * N.n - rank(K, Fld)


def composition_tally(mod: ModuleAction, alg: Algebra) -> dict:
    """Multiplicity of each simple as a composition factor, summed over the
    semisimple radical layers via exact hom counts."""
    chain = radical_series(mod, alg)
    simples = simples_for(alg)
    tally: dict = {}
    for top, bot in zip(chain, chain[1:]):
        layer = quotient_action(mod, top, bot)
        if layer.n == 0:
            continue
        for lam, L in simples:
            m = hom_dim(L, layer)
            if m:
                tally[lam] = tally.get(lam, 0) + m
    dims = {lam: L.n for lam, L in simples}
    total = sum(mult * dims[lam] for lam, mult in tally.items())
    if total != mod.n:
        raise AssertionError(f"composition tally dimension check failed: {total} != {mod.n}")
    return tally


def projectivity_certificate(mod: ModuleAction) -> tuple[list[int], bool]:
    """Jordan type of the nilpotent E-action; all parts equal to p certifies
    freeness over the subalgebra generated by e (the rank-variety test for
    ad-stable modules)."""
    parts = jordan_type_nilpotent(mod.E, mod.algebra.field)
    p = mod.algebra.p
    return parts, bool(parts) and all(s == p for s in parts)


def graded_piece_module(
    alg: Algebra, label: BlockLabel, kind: str, d: int, part: str = "block"
) -> ModuleAction:
    """The ad-action induced on the degree-d layer of a block filtration.

    part selects the layer of the block itself, of the ideal <c - alpha>
    (graded by intersection), or of the quotient by that ideal.
    """
    from .filt import filtration_spaces, ideal_c_minus_alpha

    if alg.chi.kind != "zero":
        raise ValueError("graded pieces carry the adjoint action at chi = 0 only")
    if part not in ("block", "ideal", "quotient"):
        raise ValueError(f"unknown part {part!r}")
    blk = get_block(alg, label)
    spaces = filtration_spaces(alg, blk, kind)
    total = spaces[d]
    sub = spaces[d - 1] if d > 0 else Subspace.zero(alg.field, alg.dim)
    if part != "block":
        ideal = ideal_c_minus_alpha(alg, label).subspace
        if part == "ideal":
            total = total.intersect(ideal)
            sub = sub.intersect(ideal)
        else:
            total = total + ideal
            sub = sub + ideal
    ambient_mod = ModuleAction(
        alg, alg.dim, alg.ad_matrix("e"), alg.ad_matrix("f"), alg.ad_matrix("h")
    )
    return quotient_action(ambient_mod, total, sub)


def projective_cover_factors(p: int, lam: int) -> dict[int, int]:
    """Composition factors of the projective cover of the simple with
    highest weight lam: the Steinberg cover is simple, the others are
    2p-dimensional with factors lam and p-2-lam, twice each."""
    if lam == p - 1:
        return {p - 1: 1}
    return {lam: 2, p - 2 - lam: 2} if lam != p - 2 - lam else {lam: 4}


def expected_adjoint_tally(p: int, omega: int) -> dict[int, int]:
    """Composition tally of the adjoint block predicted by the projective
    decomposition of the quotient and ideal summands."""
    tally: dict[int, int] = {}

    def bump(lam, m):
        tally[lam] = tally.get(lam, 0) + m

    for i in range((p - 1) // 2 + 1):
        for lam, m in projective_cover_factors(p, 2 * i).items():
            bump(lam, m)
    if omega == 0:
        return tally
    for i in range(p, p + omega):
        bump(3 * p - 2 * i - 2, 2)
    for i in range(omega, (p - 1) // 2 + 1):
        for lam, m in projective_cover_factors(p, 2 * i).items():
            bump(lam, m)
    for i in range(p - omega + 1, p + 1):
        bump(2 * p - 2 * i, 2)
    return tally


def invariants_dim(mod: ModuleAction) -> int:
    """Dimension of the joint kernel of e, f, h (the module invariants)."""
    stacked = np.ascontiguousarray(np.vstack([mod.E, mod.F, mod.H]))
    return kernel(stacked, mod.algebra.field).dim
