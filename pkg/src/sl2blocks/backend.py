"""Kernel backend selection.

The hot kernels exist twice: jitted (numba) and pure numpy.  The active
implementation is chosen once at import time from the environment variable
SL2BLOCKS_BACKEND:

    numba   force the jitted kernels (error if numba is missing)
    numpy   force the pure-numpy fallback
    auto    numba when importable, numpy otherwise (default)

Both backends are exact and produce identical outputs; benchmarks/ compares
their speed.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_env = os.environ.get("SL2BLOCKS_BACKEND", "auto").lower()
if _env not in ("auto", "numba", "numpy"):
    raise RuntimeError(f"SL2BLOCKS_BACKEND={_env!r}: expected numba, numpy or auto")

if _env == "numpy":
    _impl = _kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as _impl

        BACKEND = "numba"
    except ImportError:
        if _env == "numba":
            raise
        _impl = _kernels_numpy
        BACKEND = "numpy"


def rref_inplace(M, field):
    """RREF of M in place; returns (rank, pivot columns)."""
    rank, piv = _impl.rref(M, field.add, field.mul, field.inv, field.neg)
    return int(rank), piv[:rank].copy()


def matmul(A, B, field):
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"matmul dimension mismatch: {A.shape} x {B.shape}")
    return _impl.matmul(A, B, field.add, field.mul)


def matvec(A, x, field):
    if A.shape[1] != x.shape[0]:
        raise ValueError(f"matvec dimension mismatch: {A.shape} x {x.shape}")
    return _impl.matvec(A, x, field.add, field.mul)


def alg_mul(u, v, alg):
    return _impl.alg_mul(
        u, v, alg.p, alg.echar, alg.hshift, alg.rhf, alg.rhe, alg.reb,
        alg.field.add, alg.field.mul,
    )


def left_mul_matrix(u, alg):
    return _impl.left_mul_matrix(
        u, alg.p, alg.echar, alg.hshift, alg.rhf, alg.rhe, alg.reb,
        alg.field.add, alg.field.mul,
    )


def gram(alg):
    return _impl.gram(alg.p, alg.echar, alg.hshift, alg.field.add, alg.field.mul)


def gen_left(v, gen, alg):
    return _impl.gen_left(v, gen, alg.p, alg.echar, alg.hshift, alg.field.add, alg.field.mul)


def gen_right(v, gen, alg):
    return _impl.gen_right(
        v, gen, alg.p, alg.echar, alg.hshift, alg.rhf, alg.rhe, alg.reb,
        alg.field.add, alg.field.mul,
    )


def rep_tensor(E, F, H, p, field):
    return _impl.rep_tensor(E, F, H, p, field.add, field.mul)
