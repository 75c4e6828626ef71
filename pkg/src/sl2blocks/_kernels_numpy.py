"""Pure-numpy twins of the jitted kernels in _kernels_numba.

Same signatures, same int64-code/table semantics; row and slice updates are
vectorized table gathers instead of scalar loops.  Selected by setting
SL2BLOCKS_BACKEND=numpy (or automatically when numba is unavailable).
"""

import numpy as np


def rref(M, add, mul, inv, neg):
    m, n = M.shape
    lim = min(m, n)
    piv = np.full(lim, -1, dtype=np.int64)
    r = 0
    for c in range(n):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr], :] = M[[pr, r], :]
        s = inv[M[r, c]]
        if s != 1:
            M[r, :] = mul[s, M[r, :]]
        rows = np.nonzero(M[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            M[rows, :] = add[M[rows, :], mul[neg[M[rows, c]][:, None], M[r, :][None, :]]]
        piv[r] = c
        r += 1
        if r == lim:
            break
    return r, piv


def matmul(A, B, add, mul):
    m = A.shape[0]
    n = B.shape[1]
    C = np.zeros((m, n), dtype=np.int64)
    for k in range(A.shape[1]):
        col = A[:, k]
        if np.any(col):
            C = add[C, mul[col[:, None], B[k, :][None, :]]]
    return C


def matvec(A, x, add, mul):
    y = np.zeros(A.shape[0], dtype=np.int64)
    for k in np.nonzero(x)[0]:
        y = add[y, mul[x[k], A[:, k]]]
    return y


def _scalars(p, s):
    """Per-index structure constants shared by the generator kernels."""
    i = np.arange(p, dtype=np.int64)
    c4 = (-i) % p                                # -i
    c4s = ((-i % p) * s) % p                     # -i*s
    c5 = (-i[:, None] * (i[:, None] - 1 - 2 * i[None, :])) % p  # -i(i-1-2j)
    w2 = (2 * (i[:, None] - i[None, :])) % p     # 2(i-j)
    return c4, c4s, c5, w2


def _acc(out, sl, add, term):
    out[sl] = add[out[sl], term]


def gen_left(v, gen, p, echar, s, add, mul):
    v3 = v.reshape(p, p, p)
    out = np.zeros((p, p, p), dtype=np.int64)
    c4, c4s, c5, w2 = _scalars(p, s)
    if gen == 2:  # h*
        out[:, :, 1:] = v3[:, :, : p - 1]
        _acc(out, np.s_[:, :, 1], add, v3[:, :, p - 1])
        if s:
            _acc(out, np.s_[:, :, 0], add, mul[s, v3[:, :, p - 1]])
        _acc(out, np.s_[:, :, :], add, mul[w2[:, :, None], v3])
    elif gen == 0:  # e* is a pure shift on the leading e-block (e^p = 0)
        out[1:, :, :] = v3[: p - 1, :, :]
    else:  # f*
        out[:, 1:, :] = v3[:, : p - 1, :]
        if echar:
            _acc(out, np.s_[:, 0, :], add, v3[:, p - 1, :])
        _acc(out, np.s_[: p - 1, :, 1:], add, mul[c4[1:][:, None, None], v3[1:, :, : p - 1]])
        _acc(out, np.s_[: p - 1, :, 1], add, mul[c4[1:][:, None], v3[1:, :, p - 1]])
        _acc(out, np.s_[: p - 1, :, 0], add, mul[c4s[1:][:, None], v3[1:, :, p - 1]])
        _acc(out, np.s_[: p - 1, :, :], add, mul[c5[1:, :][:, :, None], v3[1:, :, :]])
    return out.reshape(-1)


def gen_right(v, gen, p, echar, s, rhf, rhe, reb, add, mul):
    v3 = v.reshape(p, p, p)
    out = np.zeros((p, p, p), dtype=np.int64)
    if gen == 2:  # *h
        out[:, :, 1:] = v3[:, :, : p - 1]
        _acc(out, np.s_[:, :, 1], add, v3[:, :, p - 1])
        if s:
            _acc(out, np.s_[:, :, 0], add, mul[s, v3[:, :, p - 1]])
    elif gen == 1:  # *f
        for k in range(p):
            for r in range(k + 1):
                c = rhf[k, r]
                if not c:
                    continue
                _acc(out, np.s_[:, 1:, r], add, mul[c, v3[:, : p - 1, k]])
                if echar:
                    _acc(out, np.s_[:, 0, r], add, mul[c, v3[:, p - 1, k]])
    else:  # *e
        for k in range(p):
            for r in range(k + 1):
                c = rhe[k, r]
                if c:
                    _acc(out, np.s_[1:, :, r], add, mul[c, v3[: p - 1, :, k]])
        for j in range(1, p):
            for k in range(p):
                top = min(k + 2, p)
                for r in range(top):
                    c = reb[j, k, r]
                    if c:
                        _acc(out, np.s_[:, j - 1, r], add, mul[c, v3[:, j, k]])
    return out.reshape(-1)


def _gen_leftT(r, gen, p, echar, s, add, mul):
    r3 = r.reshape(p, p, p)
    out = np.zeros((p, p, p), dtype=np.int64)
    c4, c4s, c5, w2 = _scalars(p, s)
    if gen == 2:
        out[:, :, : p - 1] = r3[:, :, 1:]
        out[:, :, p - 1] = r3[:, :, 1]
        if s:
            _acc(out, np.s_[:, :, p - 1], add, mul[s, r3[:, :, 0]])
        _acc(out, np.s_[:, :, :], add, mul[w2[:, :, None], r3])
    elif gen == 0:
        out[: p - 1, :, :] = r3[1:, :, :]
    else:
        out[:, : p - 1, :] = r3[:, 1:, :]
        if echar:
            out[:, p - 1, :] = r3[:, 0, :]
        _acc(out, np.s_[1:, :, : p - 1], add, mul[c4[1:][:, None, None], r3[: p - 1, :, 1:]])
        _acc(out, np.s_[1:, :, p - 1], add, mul[c4[1:][:, None], r3[: p - 1, :, 1]])
        _acc(out, np.s_[1:, :, p - 1], add, mul[c4s[1:][:, None], r3[: p - 1, :, 0]])
        _acc(out, np.s_[1:, :, :], add, mul[c5[1:, :][:, :, None], r3[: p - 1, :, :]])
    return out.reshape(-1)


def alg_mul(u, v, p, echar, s, rhf, rhe, reb, add, mul):
    n = p * p * p
    v3 = v.reshape(p, p, p)
    res = np.zeros(n, dtype=np.int64)
    fiber = np.any(v3 != 0, axis=2)
    maxj = np.full(p, -1, dtype=np.int64)
    for i in range(p):
        nz = np.nonzero(fiber[i])[0]
        if nz.size:
            maxj[i] = int(nz[-1])
    nzrows = np.nonzero(maxj >= 0)[0]
    maxi = int(nzrows[-1]) if nzrows.size else -1

    colI = u.copy()
    for i in range(maxi + 1):
        if i > 0:
            colI = gen_right(colI, 0, p, echar, s, rhf, rhe, reb, add, mul)
        if maxj[i] < 0:
            continue
        colJ = colI
        for j in range(maxj[i] + 1):
            if j > 0:
                colJ = gen_right(colJ, 1, p, echar, s, rhf, rhe, reb, add, mul)
            nzk = np.nonzero(v3[i, j])[0]
            if nzk.size == 0:
                continue
            colK = colJ
            for k in range(int(nzk[-1]) + 1):
                if k > 0:
                    colK = gen_right(colK, 2, p, echar, s, rhf, rhe, reb, add, mul)
                c = v3[i, j, k]
                if c:
                    res = add[res, mul[c, colK]]
    return res


def left_mul_matrix(u, p, echar, s, rhf, rhe, reb, add, mul):
    n = p * p * p
    p2 = p * p
    L = np.zeros((n, n), dtype=np.int64)
    colI = u.copy()
    for i in range(p):
        if i > 0:
            colI = gen_right(colI, 0, p, echar, s, rhf, rhe, reb, add, mul)
        colJ = colI
        for j in range(p):
            if j > 0:
                colJ = gen_right(colJ, 1, p, echar, s, rhf, rhe, reb, add, mul)
            colK = colJ
            for k in range(p):
                if k > 0:
                    colK = gen_right(colK, 2, p, echar, s, rhf, rhe, reb, add, mul)
                L[:, i * p2 + j * p + k] = colK
    return L


def gram(p, echar, s, add, mul):
    n = p * p * p
    p2 = p * p
    B = np.zeros((n, n), dtype=np.int64)
    rowI = np.zeros(n, dtype=np.int64)
    rowI[n - 1] = 1
    for i in range(p):
        if i > 0:
            rowI = _gen_leftT(rowI, 0, p, echar, s, add, mul)
        rowJ = rowI
        for j in range(p):
            if j > 0:
                rowJ = _gen_leftT(rowJ, 1, p, echar, s, add, mul)
            rowK = rowJ
            for k in range(p):
                if k > 0:
                    rowK = _gen_leftT(rowK, 2, p, echar, s, add, mul)
                B[i * p2 + j * p + k, :] = rowK
    return B


def rep_tensor(E, F, H, p, add, mul):
    n = E.shape[0]
    p2 = p * p
    T = np.zeros((p * p2, n, n), dtype=np.int64)
    T[0] = np.eye(n, dtype=np.int64)
    for i in range(p):
        for j in range(p):
            for k in range(p):
                idx = i * p2 + j * p + k
                if idx == 0:
                    continue
                if k > 0:
                    T[idx] = matmul(T[idx - 1], H, add, mul)
                elif j > 0:
                    T[idx] = matmul(T[idx - p], F, add, mul)
                else:
                    T[idx] = matmul(T[idx - p2], E, add, mul)
    return T
