"""Filtrations on a block and the duality between them.

Three filtrations live on a block A with projection pi and the Casimir c:

    pf   pushforward:   pi(V_i) for the degree filtration V_i,
    int  intersection:  V_i intersect A,
    sh   shifted:       S_0 = <pi>,  S_i = pi(V_i) + S_{i-1} + c*S_{i-1},

together with the nondegenerate trace form b(u, v) = top coefficient of
u*v, its orthogonal complements, and the principal ideal <c - alpha>.
Tables run over degrees 0 .. 3(p-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .blocks import Block, BlockLabel, get_block
from .linalg import Subspace, matmul, orth_complement
from .pbw import Algebra, AlgElem

KINDS = ("pf", "int", "sh")


@dataclass(frozen=True)
class GramForm:
    p: int
    chi: object
    matrix: np.ndarray


@dataclass(frozen=True)
class FiltrationTable:
    label: BlockLabel
    kind: str
    cumulative: tuple[int, ...]
    graded: tuple[int, ...]
    stabilization: int


@dataclass
class DualityReport:
    label: BlockLabel
    ok: bool
    first_failing_i: int | None
    pf_dims: list[int]
    complement_dims: list[int]
    perp_matches_pbw: bool


@dataclass
class IdealData:
    label: BlockLabel
    subspace: Subspace
    dim: int
    generator: np.ndarray  # pi*(c - alpha)
    sh_cumulative: list[int] = dc_field(default_factory=list)
    sh_graded: list[int] = dc_field(default_factory=list)
    pf_cumulative: list[int] = dc_field(default_factory=list)
    pf_graded: list[int] = dc_field(default_factory=list)


def gram_form(alg: Algebra) -> GramForm:
    return GramForm(alg.p, alg.chi, alg.gram_matrix())


_spaces_cache: dict = {}


def filtration_spaces(alg: Algebra, blk: Block, kind: str) -> list[Subspace]:
    """The chain of subspaces of one filtration, degrees 0 .. 3(p-1)."""
    key = (alg.key(), blk.label, kind)
    if key in _spaces_cache:
        return _spaces_cache[key]
    if kind not in KINDS:
        raise ValueError(f"unknown filtration kind {kind!r}")
    N = alg.top_degree()
    F = alg.field
    out: list[Subspace] = []
    if kind == "pf":
        from . import backend

        L = backend.left_mul_matrix(blk.idempotent.vec, alg)
        prev_rows = np.zeros((0, alg.dim), dtype=np.int64)
        for d in range(N + 1):
            new_cols = np.nonzero(alg.mono_deg == d)[0]
            rows = np.vstack([prev_rows, L[:, new_cols].T])
            sp = Subspace.span(F, rows, alg.dim)
            out.append(sp)
            prev_rows = sp.basis
    elif kind == "int":
        from .linalg import kernel

        A = blk.subspace
        for d in range(N + 1):
            outside = np.nonzero(alg.mono_deg > d)[0]
            if outside.size == 0:
                out.append(A)
                continue
            S = np.ascontiguousarray(A.basis[:, outside])
            K = kernel(S.T.copy(), F)
            if K.dim == 0:
                out.append(Subspace.zero(F, alg.dim))
            else:
                out.append(Subspace.span(F, matmul(K.basis, A.basis, F), alg.dim))
    else:
        Lc = alg.casimir_matrix()
        pf = filtration_spaces(alg, blk, "pf")
        cur = Subspace.span(F, blk.idempotent.vec.reshape(1, -1), alg.dim)
        out.append(cur)
        for d in range(1, N + 1):
            shifted = matmul(cur.basis, Lc.T.copy(), F) if cur.dim else cur.basis
            rows = np.vstack([pf[d].basis, cur.basis, shifted])
            cur = Subspace.span(F, rows, alg.dim)
            out.append(cur)
    _spaces_cache[key] = out
    return out


def filtration(alg: Algebra, label: BlockLabel, kind: str) -> FiltrationTable:
    blk = get_block(alg, label)
    spaces = filtration_spaces(alg, blk, kind)
    cum = tuple(s.dim for s in spaces)
    graded = tuple(c - (cum[i - 1] if i else 0) for i, c in enumerate(cum))
    stab = next(i for i, c in enumerate(cum) if c == blk.dim)
    return FiltrationTable(label, kind, cum, graded, stab)


def duality_check(alg: Algebra, label: BlockLabel) -> DualityReport:
    """Exact check that pi(V_i)^perp inside the block equals A cap V_i^perp,
    with the matching dimension identity, for every degree i."""
    blk = get_block(alg, label)
    A = blk.subspace
    G = alg.gram_matrix()
    N = alg.top_degree()
    pf = filtration_spaces(alg, blk, "pf")
    report = DualityReport(label, True, None, [], [], True)
    for i in range(N + 1):
        Vi = alg.pbw_subspace(i)
        Vperp = orth_complement(Vi, G)
        if Vperp != alg.pbw_subspace(N - i - 1):
            report.perp_matches_pbw = False
        lhs = orth_complement(pf[i], G).intersect(A)
        rhs = A.intersect(Vperp)
        ok = (
            lhs == rhs
            and lhs.contains_space(rhs)
            and rhs.contains_space(lhs)
            and pf[i].dim + rhs.dim == blk.dim
        )
        report.pf_dims.append(pf[i].dim)
        report.complement_dims.append(rhs.dim)
        if not ok and report.ok:
            report.ok = False
            report.first_failing_i = i
    if not report.perp_matches_pbw:
        report.ok = False
    return report


def ideal_c_minus_alpha(alg: Algebra, label: BlockLabel) -> IdealData:
    """The ideal (c - alpha)A with its graded dimensions under sh and pf.

    The subspace is the column space of left multiplication by
    pi*(c - alpha); it is zero exactly when the coinvariants are trivial.
    """
    from . import backend
    from .blocks import coinvariants

    blk = get_block(alg, label)
    F = alg.field
    co = coinvariants(alg, blk)
    gen = co.c_minus_alpha
    if not np.any(gen):
        sub = Subspace.zero(F, alg.dim)
    else:
        L = backend.left_mul_matrix(np.ascontiguousarray(gen), alg)
        from .blocks import _column_space_by_weight

        sub = _column_space_by_weight(alg, L)
    data = IdealData(label, sub, sub.dim, gen)
    for kind in ("sh", "pf"):
        spaces = filtration_spaces(alg, blk, kind)
        cum = [sub.intersect(s).dim for s in spaces]
        graded = [c - (cum[i - 1] if i else 0) for i, c in enumerate(cum)]
        if kind == "sh":
            data.sh_cumulative, data.sh_graded = cum, graded
        else:
            data.pf_cumulative, data.pf_graded = cum, graded
    return data


def nilpotency_witness(alg: Algebra, label: BlockLabel) -> bool:
    """Exact check that e^{p-omega} * pi*(c-alpha) = 0 (zero character,
    nonzero alpha)."""
    if alg.chi.kind != "zero" or label.alpha == 0:
        raise ValueError("witness applies to chi = 0 and alpha != 0")
    from .blocks import coinvariants

    blk = get_block(alg, label)
    co = coinvariants(alg, blk)
    epow = alg.monomial(alg.p - label.omega, 0, 0)
    prod = alg.mul(epow, AlgElem(alg, co.c_minus_alpha.copy()))
    return prod.is_zero()


def quotient_graded_dims(alg: Algebra, label: BlockLabel) -> list[int]:
    """Graded dimensions of the shifted filtration on A / <c - alpha>."""
    blk = get_block(alg, label)
    ideal = ideal_c_minus_alpha(alg, label)
    spaces = filtration_spaces(alg, blk, "sh")
    cum = [(s + ideal.subspace).dim - ideal.dim for s in spaces]
    return [c - (cum[i - 1] if i else 0) for i, c in enumerate(cum)]


def quotient_graded_weights(alg: Algebra, label: BlockLabel) -> list[dict[int, int]]:
    """Per-degree ad(h)-weight multiplicities of gr_sh(A / <c - alpha>).

    All spaces involved are ad(h)-stable, so canonical RREF rows are
    weight-pure and the multiset is read off the pivot monomials.
    """
    blk = get_block(alg, label)
    ideal = ideal_c_minus_alpha(alg, label)
    spaces = filtration_spaces(alg, blk, "sh")
    prev: dict[int, int] = {}
    for c in ideal.subspace.pivots:
        w = int(alg.hweight[c])
        prev[w] = prev.get(w, 0) + 1
    out = []
    for s in spaces:
        total = s + ideal.subspace
        counts: dict[int, int] = {}
        for c in total.pivots:
            w = int(alg.hweight[c])
            counts[w] = counts.get(w, 0) + 1
        layer = {w: counts.get(w, 0) - prev.get(w, 0) for w in set(counts) | set(prev)}
        out.append({w: m for w, m in layer.items() if m})
        prev = counts
    return out
