"""Numba-jitted hot kernels: exact table-field linear algebra and the
normal-ordering engine for the monomial basis e^i f^j h^k.

Every kernel works on int64 codes with the field's dense add/mul/neg/inv
tables passed in, so one compiled specialization serves F_p and F_{p^p}
alike.  The pure-numpy twins live in _kernels_numpy; the backend module
selects between them.

Monomial index convention: idx(i, j, k) = i*p^2 + j*p + k.
Scalar structure constants are prime-subfield codes, so composing them with
plain integer arithmetic mod p is exact.
"""

import numpy as np
from numba import njit

_JIT = dict(cache=True)


@njit(**_JIT)
def rref(M, add, mul, inv, neg):
    """Reduced row echelon form in place; first-nonzero pivoting.

    Returns (rank, pivots) with pivots of length min(m, n), valid up to rank.
    """
    m, n = M.shape
    lim = m if m < n else n
    piv = np.full(lim, -1, dtype=np.int64)
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, m):
            if M[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for jj in range(c, n):
                tmp = M[r, jj]
                M[r, jj] = M[pr, jj]
                M[pr, jj] = tmp
        s = inv[M[r, c]]
        if s != 1:
            for jj in range(c, n):
                M[r, jj] = mul[s, M[r, jj]]
        for i in range(m):
            if i != r and M[i, c] != 0:
                f = neg[M[i, c]]
                for jj in range(c, n):
                    M[i, jj] = add[M[i, jj], mul[f, M[r, jj]]]
        piv[r] = c
        r += 1
        if r == lim:
            break
    return r, piv


@njit(**_JIT)
def matmul(A, B, add, mul):
    m, kk = A.shape
    n = B.shape[1]
    C = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for k in range(kk):
            a = A[i, k]
            if a != 0:
                for j in range(n):
                    b = B[k, j]
                    if b != 0:
                        C[i, j] = add[C[i, j], mul[a, b]]
    return C


@njit(**_JIT)
def matvec(A, x, add, mul):
    m, n = A.shape
    y = np.zeros(m, dtype=np.int64)
    for k in range(n):
        c = x[k]
        if c != 0:
            for i in range(m):
                a = A[i, k]
                if a != 0:
                    y[i] = add[y[i], mul[c, a]]
    return y


@njit(**_JIT)
def _gen_left_into(v, out, gen, p, echar, s, add, mul):
    """out += g * v for a generator g in {0: e, 1: f, 2: h}."""
    p2 = p * p
    for i in range(p):
        for j in range(p):
            base = i * p2 + j * p
            for k in range(p):
                x = v[base + k]
                if x == 0:
                    continue
                if gen == 2:  # h e^i f^j h^k
                    if k + 1 < p:
                        out[base + k + 1] = add[out[base + k + 1], x]
                    else:
                        out[base + 1] = add[out[base + 1], x]
                        if s != 0:
                            out[base] = add[out[base], mul[s, x]]
                    w = (2 * (i - j)) % p
                    if w:
                        out[base + k] = add[out[base + k], mul[w, x]]
                elif gen == 0:  # e e^i f^j h^k = e^{i+1} f^j h^k (e^p = 0)
                    if i + 1 < p:
                        t = base + p2 + k
                        out[t] = add[out[t], x]
                else:  # f e^i f^j h^k
                    if j + 1 < p:
                        t = base + p + k
                        out[t] = add[out[t], x]
                    elif echar:
                        t = i * p2 + k
                        out[t] = add[out[t], x]
                    if i > 0:
                        b2 = base - p2
                        c4 = (-i) % p
                        if k + 1 < p:
                            out[b2 + k + 1] = add[out[b2 + k + 1], mul[c4, x]]
                        else:
                            out[b2 + 1] = add[out[b2 + 1], mul[c4, x]]
                            cs = (c4 * s) % p
                            if cs:
                                out[b2] = add[out[b2], mul[cs, x]]
                        c5 = (-i * (i - 1 - 2 * j)) % p
                        if c5:
                            out[b2 + k] = add[out[b2 + k], mul[c5, x]]


@njit(**_JIT)
def _gen_right_into(v, out, gen, p, echar, s, rhf, rhe, reb, add, mul):
    """out += v * g for a generator g in {0: e, 1: f, 2: h}."""
    p2 = p * p
    for i in range(p):
        for j in range(p):
            base = i * p2 + j * p
            for k in range(p):
                x = v[base + k]
                if x == 0:
                    continue
                if gen == 2:  # e^i f^j h^k * h
                    if k + 1 < p:
                        out[base + k + 1] = add[out[base + k + 1], x]
                    else:
                        out[base + 1] = add[out[base + 1], x]
                        if s != 0:
                            out[base] = add[out[base], mul[s, x]]
                elif gen == 1:  # e^i f^j h^k * f = e^i f^{j+1} (h-2)^k
                    if j + 1 < p:
                        b2 = base + p
                    elif echar:
                        b2 = i * p2
                    else:
                        continue
                    for r in range(k + 1):
                        c = rhf[k, r]
                        if c:
                            out[b2 + r] = add[out[b2 + r], mul[c, x]]
                else:  # e^i f^j h^k * e
                    if i + 1 < p:
                        b2 = base + p2
                        for r in range(k + 1):
                            c = rhe[k, r]
                            if c:
                                out[b2 + r] = add[out[b2 + r], mul[c, x]]
                    if j > 0:
                        b2 = base - p
                        for r in range(p):
                            c = reb[j, k, r]
                            if c:
                                out[b2 + r] = add[out[b2 + r], mul[c, x]]


@njit(**_JIT)
def gen_left(v, gen, p, echar, s, add, mul):
    out = np.zeros(v.shape[0], dtype=np.int64)
    _gen_left_into(v, out, gen, p, echar, s, add, mul)
    return out


@njit(**_JIT)
def gen_right(v, gen, p, echar, s, rhf, rhe, reb, add, mul):
    out = np.zeros(v.shape[0], dtype=np.int64)
    _gen_right_into(v, out, gen, p, echar, s, rhf, rhe, reb, add, mul)
    return out


@njit(**_JIT)
def alg_mul(u, v, p, echar, s, rhf, rhe, reb, add, mul):
    """Product u*v: accumulate v[m] * (u*m) over the right-generator chain

        col(m*g) = col(m)*g,   col(1) = u,

    walking monomials in lex order so each step is a single generator.
    """
    n = p * p * p
    p2 = p * p
    res = np.zeros(n, dtype=np.int64)
    # last nonzero h-exponent per (i, j) fiber of v, -1 if the fiber is zero
    last = np.full(p2, -1, dtype=np.int64)
    maxj = np.full(p, -1, dtype=np.int64)
    for i in range(p):
        for j in range(p):
            for k in range(p - 1, -1, -1):
                if v[i * p2 + j * p + k] != 0:
                    last[i * p + j] = k
                    maxj[i] = j if j > maxj[i] else maxj[i]
                    break
    maxi = -1
    for i in range(p):
        if maxj[i] >= 0:
            maxi = i

    colI = u.copy()
    for i in range(maxi + 1):
        if i > 0:
            nxt = np.zeros(n, dtype=np.int64)
            _gen_right_into(colI, nxt, 0, p, echar, s, rhf, rhe, reb, add, mul)
            colI = nxt
        if maxj[i] < 0:
            continue
        colJ = colI.copy()
        for j in range(maxj[i] + 1):
            if j > 0:
                nxt = np.zeros(n, dtype=np.int64)
                _gen_right_into(colJ, nxt, 1, p, echar, s, rhf, rhe, reb, add, mul)
                colJ = nxt
            lk = last[i * p + j]
            if lk < 0:
                continue
            colK = colJ.copy()
            for k in range(lk + 1):
                if k > 0:
                    nxt = np.zeros(n, dtype=np.int64)
                    _gen_right_into(colK, nxt, 2, p, echar, s, rhf, rhe, reb, add, mul)
                    colK = nxt
                c = v[i * p2 + j * p + k]
                if c != 0:
                    for m in range(n):
                        w = colK[m]
                        if w != 0:
                            res[m] = add[res[m], mul[c, w]]
    return res


@njit(**_JIT)
def left_mul_matrix(u, p, echar, s, rhf, rhe, reb, add, mul):
    """Matrix of x -> u*x in the monomial basis (column m is u*m)."""
    n = p * p * p
    p2 = p * p
    L = np.zeros((n, n), dtype=np.int64)
    colI = u.copy()
    for i in range(p):
        if i > 0:
            nxt = np.zeros(n, dtype=np.int64)
            _gen_right_into(colI, nxt, 0, p, echar, s, rhf, rhe, reb, add, mul)
            colI = nxt
        colJ = colI.copy()
        for j in range(p):
            if j > 0:
                nxt = np.zeros(n, dtype=np.int64)
                _gen_right_into(colJ, nxt, 1, p, echar, s, rhf, rhe, reb, add, mul)
                colJ = nxt
            colK = colJ.copy()
            for k in range(p):
                if k > 0:
                    nxt = np.zeros(n, dtype=np.int64)
                    _gen_right_into(colK, nxt, 2, p, echar, s, rhf, rhe, reb, add, mul)
                    colK = nxt
                idx = i * p2 + j * p + k
                for m in range(n):
                    L[m, idx] = colK[m]
    return L


@njit(**_JIT)
def _gen_leftT_into(r, out, gen, p, echar, s, add, mul):
    """out[m] += (r . L_g)[m], i.e. the functional r pulled back along x -> g*x."""
    p2 = p * p
    for i in range(p):
        for j in range(p):
            base = i * p2 + j * p
            for k in range(p):
                acc = np.int64(0)
                if gen == 2:
                    if k + 1 < p:
                        acc = r[base + k + 1]
                    else:
                        acc = r[base + 1]
                        if s != 0:
                            acc = add[acc, mul[s, r[base]]]
                    w = (2 * (i - j)) % p
                    if w:
                        acc = add[acc, mul[w, r[base + k]]]
                elif gen == 0:
                    if i + 1 < p:
                        acc = r[base + p2 + k]
                else:
                    if j + 1 < p:
                        acc = r[base + p + k]
                    elif echar:
                        acc = r[i * p2 + k]
                    if i > 0:
                        b2 = base - p2
                        c4 = (-i) % p
                        if k + 1 < p:
                            acc = add[acc, mul[c4, r[b2 + k + 1]]]
                        else:
                            acc = add[acc, mul[c4, r[b2 + 1]]]
                            cs = (c4 * s) % p
                            if cs:
                                acc = add[acc, mul[cs, r[b2]]]
                        c5 = (-i * (i - 1 - 2 * j)) % p
                        if c5:
                            acc = add[acc, mul[c5, r[b2 + k]]]
                out[base + k] = acc


@njit(**_JIT)
def gram(p, echar, s, add, mul):
    """Gram matrix B[m, m'] = coefficient of e^{p-1}f^{p-1}h^{p-1} in m*m'.

    Row m is the top-coefficient functional composed with left multiplication
    by m, propagated along the same lex generator chain as left_mul_matrix.
    """
    n = p * p * p
    p2 = p * p
    B = np.zeros((n, n), dtype=np.int64)
    rowI = np.zeros(n, dtype=np.int64)
    rowI[n - 1] = 1
    for i in range(p):
        if i > 0:
            nxt = np.zeros(n, dtype=np.int64)
            _gen_leftT_into(rowI, nxt, 0, p, echar, s, add, mul)
            rowI = nxt
        rowJ = rowI.copy()
        for j in range(p):
            if j > 0:
                nxt = np.zeros(n, dtype=np.int64)
                _gen_leftT_into(rowJ, nxt, 1, p, echar, s, add, mul)
                rowJ = nxt
            rowK = rowJ.copy()
            for k in range(p):
                if k > 0:
                    nxt = np.zeros(n, dtype=np.int64)
                    _gen_leftT_into(rowK, nxt, 2, p, echar, s, add, mul)
                    rowK = nxt
                idx = i * p2 + j * p + k
                for m in range(n):
                    B[idx, m] = rowK[m]
    return B


@njit(**_JIT)
def rep_tensor(E, F, H, p, add, mul):
    """All monomial action matrices rho(e^i f^j h^k) = E^i F^j H^k."""
    n = E.shape[0]
    p2 = p * p
    T = np.zeros((p * p2, n, n), dtype=np.int64)
    for d in range(n):
        T[0, d, d] = 1
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
