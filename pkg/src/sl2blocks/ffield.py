"""Exact arithmetic in F_p and in the Artin-Schreier extension F_{p^p}.

Every field element is stored as an integer code.  For the prime field the
code is the least nonnegative residue.  For the degree-p extension
F_p[t]/(t^p - t - a) the code is the base-p digit encoding of the
coefficient vector in the power basis of t, lowest degree first, so the
constant c < p has code c and the root t has code p.

A field carries dense operation tables (add, mul, neg, inv) as int64
arrays; all heavier array arithmetic goes through these tables so that the
prime and extension cases share one code path.  Fields and elements are
immutable after construction.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

DEFAULT_MAX_P = 13
# Extension tables are q x q with q = p^p; p = 5 gives q = 3125 which is the
# largest we allow (p = 7 would need q = 823543).
MAX_REGULAR_P = 5

_ADD_CHUNK = 64


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int, max_p: int = DEFAULT_MAX_P) -> None:
    """Validate the base characteristic: an odd prime with 3 <= p <= max_p."""
    if not is_odd_prime(p):
        raise ValueError(f"p = {p} is not an odd prime")
    if p > max_p:
        raise ValueError(f"p = {p} exceeds the supported bound {max_p}")


class Field:
    """A small finite field with dense int64 operation tables."""

    def __init__(self, p, deg, a, add, mul, neg, inv):
        self.p = p
        self.deg = deg
        self.a = a  # Artin-Schreier parameter, None for the prime field
        self.q = p**deg
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        self._pw = p ** np.arange(deg, dtype=np.int64)
        for t in (add, mul, neg, inv):
            t.flags.writeable = False

    @property
    def is_prime(self) -> bool:
        return self.deg == 1

    @property
    def t(self) -> int:
        """Code of the generator t of the extension."""
        if self.is_prime:
            raise ValueError("prime field has no extension generator")
        return self.p

    def of_int(self, n: int) -> int:
        """Code of the image of the integer n (prime subfield element)."""
        return n % self.p

    def digits(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of x in the power basis of t."""
        return tuple(int(x) // int(w) % self.p for w in self._pw)

    def from_digits(self, ds) -> int:
        return int(np.dot(np.asarray(ds, dtype=np.int64) % self.p, self._pw))

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        r, b = 1, int(x)
        while k:
            if k & 1:
                r = int(self.mul[r, b])
            b = int(self.mul[b, b])
            k >>= 1
        return r

    def elem(self, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            if x.field is not self:
                raise ValueError("element from a different field")
            return x
        return FieldElem(self, int(x) % self.q if x >= 0 else self.of_int(x))

    def elements(self):
        return range(self.q)

    def format_code(self, x: int) -> str:
        if self.is_prime:
            return str(int(x))
        return "[" + ",".join(str(d) for d in self.digits(x)) + "]"

    def __repr__(self):
        if self.is_prime:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.deg}; t^{self.p}-t-{self.a})"


@dataclass(frozen=True)
class FieldElem:
    """A field element: a code tied to its field.  Arithmetic is exact."""

    field: Field
    code: int

    def _other(self, rhs) -> int:
        if isinstance(rhs, FieldElem):
            if rhs.field is not self.field:
                raise ValueError("field mismatch")
            return rhs.code
        return self.field.of_int(int(rhs))

    def __add__(self, rhs):
        return FieldElem(self.field, int(self.field.add[self.code, self._other(rhs)]))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, int(self.field.neg[self.code]))

    def __sub__(self, rhs):
        return self + (-FieldElem(self.field, self._other(rhs)))

    def __rsub__(self, lhs):
        return FieldElem(self.field, self._other(lhs)) - self

    def __mul__(self, rhs):
        return FieldElem(self.field, int(self.field.mul[self.code, self._other(rhs)]))

    __rmul__ = __mul__

    def __truediv__(self, rhs):
        c = self._other(rhs)
        if c == 0:
            raise ZeroDivisionError("division by zero field element")
        return FieldElem(self.field, int(self.field.mul[self.code, self.field.inv[c]]))

    def __pow__(self, k: int):
        return FieldElem(self.field, self.field.pow(self.code, k))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.field.format_code(self.code)


@functools.lru_cache(maxsize=None)
def prime_field(p: int, max_p: int = DEFAULT_MAX_P) -> Field:
    check_prime(p, max_p)
    i = np.arange(p, dtype=np.int64)
    add = (i[:, None] + i[None, :]) % p
    mul = (i[:, None] * i[None, :]) % p
    neg = (-i) % p
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, p - 2, p)
    return Field(p, 1, None, add, mul, neg, inv)


def _poly_mul_digits(x, y, tpow, p):
    """Product of two digit vectors modulo t^p - t - a (tpow holds t^m digits)."""
    deg = len(x)
    out = np.zeros(deg, dtype=np.int64)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            out = (out + xi * yj * tpow[i + j]) % p
    return out


def _find_generator(p, q, tpow):
    """A multiplicative generator of F_{p^p}, found by direct order checks."""
    order = q - 1
    n, d = order, 2
    factors = []
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)

    def digpow(base, k):
        r = np.zeros(p, dtype=np.int64)
        r[0] = 1
        b = base.copy()
        while k:
            if k & 1:
                r = _poly_mul_digits(r, b, tpow, p)
            b = _poly_mul_digits(b, b, tpow, p)
            k >>= 1
        return r

    one = np.zeros(p, dtype=np.int64)
    one[0] = 1
    for code in range(p, q):
        cand = np.array([code // p**i % p for i in range(p)], dtype=np.int64)
        if all(
            not np.array_equal(digpow(cand, order // r), one) for r in factors
        ):
            return cand
    raise RuntimeError("no generator found")  # unreachable for a field


@functools.lru_cache(maxsize=None)
def artin_schreier_field(p: int, a: int) -> Field:
    """F_{p^p} = F_p[t]/(t^p - t - a) for a in F_p^x.

    The defining polynomial is irreducible precisely because a != 0, which
    is why the construction rejects a = 0.
    """
    check_prime(p, MAX_REGULAR_P)
    a = a % p
    if a == 0:
        raise ValueError("t^p - t is not irreducible; need a != 0")
    q = p**p

    # Digit vectors of t^m for m = 0 .. 2p-2, reduced by t^p = t + a.
    tpow = np.zeros((2 * p - 1, p), dtype=np.int64)
    for m in range(p):
        tpow[m, m] = 1
    for m in range(p, 2 * p - 1):
        prev = tpow[m - 1]
        cur = np.zeros(p, dtype=np.int64)
        cur[1:] = prev[: p - 1]
        carry = prev[p - 1]
        if carry:
            cur[1] = (cur[1] + carry) % p
            cur[0] = (cur[0] + carry * a) % p
        tpow[m] = cur

    pw = p ** np.arange(p, dtype=np.int64)

    # Discrete log tables off a generator give the q x q multiplication table.
    g = _find_generator(p, q, tpow)
    exp = np.zeros(q - 1, dtype=np.int64)
    cur = np.zeros(p, dtype=np.int64)
    cur[0] = 1
    for k in range(q - 1):
        exp[k] = int(np.dot(cur, pw))
        cur = _poly_mul_digits(cur, g, tpow, p)
    if not np.array_equal(np.sort(exp), np.arange(1, q)):
        raise RuntimeError("generator order check failed")
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1, dtype=np.int64)

    mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
    mul[0, :] = 0
    mul[:, 0] = 0

    codes = np.arange(q, dtype=np.int64)
    digs = (codes[:, None] // pw[None, :]) % p
    add = np.empty((q, q), dtype=np.int64)
    for lo in range(0, q, _ADD_CHUNK):
        hi = min(lo + _ADD_CHUNK, q)
        add[lo:hi] = ((digs[lo:hi, None, :] + digs[None, :, :]) % p) @ pw
    neg = ((-digs) % p) @ pw
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]

    return Field(p, p, a, add, mul, neg, inv)


def legendre(a: FieldElem) -> int:
    """Quadratic residue symbol of a prime-field element: +1, 0 or -1."""
    if not a.field.is_prime:
        raise ValueError("legendre symbol is defined on the prime field only")
    p = a.field.p
    if a.code == 0:
        return 0
    return 1 if pow(a.code, (p - 1) // 2, p) == 1 else -1


def omega_of_alpha(alpha: FieldElem) -> int:
    """The square root of alpha normalized into 0 <= w <= (p-1)/2.

    Returns 0 for alpha = 0; raises for quadratic nonresidues.
    """
    if legendre(alpha) < 0:
        raise ValueError(f"{alpha.code} is not a square mod {alpha.field.p}")
    if alpha.code == 0:
        return 0
    p = alpha.field.p
    for w in range(1, (p - 1) // 2 + 1):
        if w * w % p == alpha.code:
            return w
    raise AssertionError("unreachable: residue without root")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial, lowest degree first, trailing zeros trimmed.

    The zero polynomial is the empty tuple and reports degree -1.
    """

    field: Field
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: Field, coeffs) -> "Poly":
        cs = [int(c) % field.q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def from_ints(field: Field, ints) -> "Poly":
        return Poly.make(field, [field.of_int(int(c)) for c in ints])

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _chk(self, other: "Poly") -> None:
        if other.field is not self.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "Poly") -> "Poly":
        self._chk(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(int(F.add[a, b]))
        return Poly.make(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, tuple(int(F.neg[c]) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._chk(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = int(F.add[out[i + j], F.mul[a, b]])
        return Poly.make(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly.make(F, [int(F.mul[c, x]) for x in self.coeffs])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._chk(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quo = [0] * (dq + 1)
        lead_inv = int(F.inv[other.coeffs[-1]])
        for k in range(dq, -1, -1):
            c = int(F.mul[rem[k + other.degree], lead_inv])
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = int(F.add[rem[k + j], F.neg[F.mul[c, b]]])
        return Poly.make(F, quo), Poly.make(F, rem)

    def exact_divide(self, other: "Poly") -> "Poly":
        quo, rem = self.divmod(other)
        if not rem.is_zero():
            raise ValueError("exact_divide: divisor does not divide dividend")
        return quo

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = int(F.add[F.mul[acc, x], c])
        return acc

    def eval_all(self) -> np.ndarray:
        """Values at every field element, vectorized Horner over the tables."""
        F = self.field
        xs = np.arange(F.q, dtype=np.int64)
        acc = np.zeros(F.q, dtype=np.int64)
        for c in reversed(self.coeffs):
            acc = F.add[F.mul[acc, xs], c]
        return acc

    def roots_with_multiplicity(self) -> list[tuple[int, int]]:
        """All roots in the field, by exhaustive scan, with multiplicities."""
        if self.is_zero():
            raise ValueError("zero polynomial has every element as a root")
        F = self.field
        roots = np.nonzero(self.eval_all() == 0)[0]
        out = []
        for r in roots:
            r = int(r)
            lin = Poly.make(F, [int(F.neg[r]), 1])
            m, rest = 0, self
            while True:
                quo, rem = rest.divmod(lin)
                if not rem.is_zero():
                    break
                m, rest = m + 1, quo
            out.append((r, m))
        return out

    def __str__(self):
        if self.is_zero():
            return "0"
        F = self.field
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = F.format_code(c)
            if i == 0:
                parts.append(cs)
            else:
                xs = "c" if i == 1 else f"c^{i}"
                parts.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(parts)
