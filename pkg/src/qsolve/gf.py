"""Exact arithmetic in GF(p^n).

Elements are plain ints: the canonical encoding ``sum(c[i] * p**i)`` of the
coefficient vector ``c`` over Z_p, where ``c[i]`` multiplies ``t**i`` and
``t`` is a root of the field modulus. The prime subfield is therefore
``range(p)`` and 0 and 1 are the zero and one elements.

Multiplication, inversion, powering and Frobenius go through discrete
log/antilog tables built once per (p, n, modulus); addition uses XOR for
p = 2 and Zech logarithms otherwise. The slow coefficient-list routines
(``poly_*``) are kept both for building those tables and as an independent
reference for tests.

Subfields are never modelled separately: GF(p^e) is the fixed field of
``x -> x**(p**e)`` inside GF(p^n).
"""

from __future__ import annotations

import math
import os
from array import array
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    BadModulus,
    BadSubfield,
    DivisionByZero,
    InvalidElement,
    InvalidSpec,
    LimitExceeded,
    NonPrimeP,
    NotASquare,
    NotInSubfield,
    OddCharNotSupported,
    OddCharOnly,
)

DEFAULT_MAX_Q = 1 << 24
MAX_Q_ENV = "QSOLVE_MAX_Q"


def max_q_from_env() -> int:
    raw = os.environ.get(MAX_Q_ENV)
    if not raw:
        return DEFAULT_MAX_Q
    try:
        value = int(raw)
    except ValueError:
        raise InvalidSpec(f"{MAX_Q_ENV} must be an integer, got {raw!r}") from None
    if value < 2:
        raise InvalidSpec(f"{MAX_Q_ENV} must be at least 2")
    return value


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """The triple (p, n, k) fixing GF(Q), Q = p**n, and q = p**k."""

    p: int
    n: int
    k: int

    def __post_init__(self):
        for name in ("p", "n", "k"):
            if not isinstance(getattr(self, name), int):
                raise InvalidSpec(f"{name} must be an integer")
        if self.n < 1 or self.k < 1:
            raise InvalidSpec(f"n and k must be positive, got n={self.n}, k={self.k}")
        if not is_prime(self.p):
            raise NonPrimeP(f"p={self.p} is not prime")

    @property
    def d(self) -> int:
        return math.gcd(self.n, self.k)

    @property
    def m(self) -> int:
        return self.n // self.d

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def Q(self) -> int:
        return self.p**self.n


# ---------------------------------------------------------------------------
# Polynomials over Z_p as coefficient lists, lowest degree first, trimmed.


def poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return poly_trim(out)


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return poly_add(a, [(-c) % p for c in b], p)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = poly_trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = poly_trim(list(a))
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        poly_trim(r)
    return poly_trim(q), r


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return poly_divmod(a, b, p)[1]


def poly_mulmod(a, b, f, p) -> list[int]:
    return poly_mod(poly_mul(a, b, p), f, p)


def poly_powmod(a, e: int, f, p) -> list[int]:
    result = poly_mod([1], f, p)
    base = poly_mod(a, f, p)
    while e > 0:
        if e & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def poly_gcd(a, b, p) -> list[int]:
    """Monic gcd."""
    a, b = poly_trim(list(a)), poly_trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: gcd(X^(p^i) - X, f) = 1 for 1 <= i <= deg(f)/2."""
    f = poly_trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = poly_powmod(h, p, f, p)
        if len(poly_gcd(poly_sub(h, x, p), f, p)) > 1:
            return False
    return True


def digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        value, c = divmod(value, p)
        out.append(c)
    return out


def undigits(coeffs: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


@lru_cache(maxsize=None)
def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """Monic irreducible of degree n with the smallest base-p encoding."""
    for code in range(p**n, 2 * p**n):
        f = digits(code, p, n + 1)
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# Log tables


class _Tables(NamedTuple):
    generator: int
    exp: Sequence[int]
    log: Sequence[int]
    zech: Sequence[int]


def _times_t(v: list[int], modulus: Sequence[int], p: int) -> list[int]:
    top = v[-1]
    out = [0] + v[:-1]
    if top:
        out = [(c - top * modulus[i]) % p for i, c in enumerate(out)]
    return out


def _mul_matrix(h: list[int], modulus: Sequence[int], p: int) -> np.ndarray:
    # row j holds the coefficients of h * t^j, so row_vec @ matrix multiplies by h
    rows = []
    v = list(h)
    for _ in range(len(h)):
        rows.append(v)
        v = _times_t(v, modulus, p)
    return np.array(rows, dtype=np.int64)


def _find_generator(p: int, n: int, modulus: Sequence[int]) -> int:
    order = p**n - 1
    if order == 1:
        return 1
    cofactors = [order // ell for ell in prime_factors(order)]
    for g in range(2, p**n):
        gc = poly_trim(digits(g, p, n))
        if all(poly_powmod(gc, e, modulus, p) != [1] for e in cofactors):
            return g
    raise AssertionError("field has no generator")  # pragma: no cover


@lru_cache(maxsize=16)
def _build_tables(p: int, n: int, modulus: tuple[int, ...]) -> _Tables:
    Q = p**n
    order = Q - 1
    g = _find_generator(p, n, modulus)
    step = _mul_matrix(digits(g, p, n), modulus, p)
    weights = np.array([p**i for i in range(n)], dtype=np.int64)

    # g^0 .. g^(B-1) one at a time, then whole blocks by multiplying with g^B
    block = max(1, math.isqrt(order))
    rows = np.zeros((block, n), dtype=np.int64)
    rows[0, 0] = 1
    for i in range(1, block):
        rows[i] = rows[i - 1] @ step % p
    jump = _mul_matrix((rows[-1] @ step % p).tolist(), modulus, p)

    exp = np.empty(order, dtype=np.int64)
    for start in range(0, order, block):
        stop = min(start + block, order)
        exp[start:stop] = (rows @ weights)[: stop - start]
        rows = rows @ jump % p

    log = np.full(Q, -1, dtype=np.int64)
    log[exp] = np.arange(order, dtype=np.int64)
    if p == 2:
        one_plus = exp ^ 1
    else:
        one_plus = np.where(exp % p == p - 1, exp - (p - 1), exp + 1)
    zech = log[one_plus]

    if Q <= 1 << 20:
        return _Tables(g, exp.tolist(), log.tolist(), zech.tolist())
    return _Tables(g, array("q", exp.tobytes()), array("q", log.tobytes()), array("q", zech.tobytes()))


# ---------------------------------------------------------------------------


class Quadratic(Enum):
    ZERO = "zero"
    RESIDUE = "residue"
    NONRESIDUE = "nonresidue"


class Elt2(NamedTuple):
    """lo + hi*s in GF(Q^2) = GF(Q)[s]/(s^2 + s + delta); p = 2 only."""

    lo: int
    hi: int


class Field:
    """GF(p^n) together with the Frobenius exponent k of the problem.

    Instances are immutable after construction; use :func:`field_create`.
    """

    def __init__(self, spec: FieldSpec, modulus: Optional[Sequence[int]] = None, max_q: Optional[int] = None):
        if max_q is None:
            max_q = max_q_from_env()
        if spec.Q > max_q:
            raise LimitExceeded(f"Q = {spec.p}^{spec.n} = {spec.Q} exceeds bound {max_q}")
        p, n = spec.p, spec.n
        if modulus is None:
            modulus = canonical_modulus(p, n)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != n + 1:
                raise BadModulus(f"modulus needs {n + 1} coefficients, got {len(modulus)}")
            if any(not 0 <= c < p for c in modulus):
                raise BadModulus(f"modulus coefficients must lie in [0, {p})")
            if modulus[-1] != 1:
                raise BadModulus("modulus must be monic")
            if not is_irreducible(modulus, p):
                raise BadModulus(f"modulus {list(modulus)} is reducible over Z_{p}")

        self.spec = spec
        self.p, self.n, self.k = p, n, spec.k
        self.d, self.m = spec.d, spec.m
        self.Q = spec.Q
        self.order = self.Q - 1
        self.max_q = max_q
        self.modulus = modulus

        tables = _build_tables(p, n, modulus)
        self.generator = tables.generator
        self._exp, self._log, self._zech = tables.exp, tables.log, tables.zech
        self._ppow = [pow(p, j, self.order) if self.order > 1 else 0 for j in range(n)]
        self._half = self.order // 2

        if p == 2:
            self._as_basis = self._artin_schreier_basis()
            self.delta = next(x for x in range(1, self.Q) if self.abs_trace(x) == 1)
            self._nonresidue = None
        else:
            self._as_basis = None
            self.delta = None
            self._nonresidue = next(x for x in range(2, self.Q) if self.pow(x, self._half) != 1)

    def __repr__(self):
        return f"Field(p={self.p}, n={self.n}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.spec == other.spec and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.spec, self.modulus))

    def describe(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "m": self.m,
            "modulus": list(self.modulus),
        }

    # -- encoding ----------------------------------------------------------

    def check(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.Q:
            raise InvalidElement(f"{x!r} is not an element encoding in [0, {self.Q})")
        return x

    def to_coeffs(self, x: int) -> list[int]:
        return digits(self.check(x), self.p, self.n)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise InvalidElement(f"at most {self.n} coefficients expected")
        if any(not 0 <= c < self.p for c in coeffs):
            raise InvalidElement(f"coefficients must lie in [0, {self.p})")
        return undigits(coeffs, self.p)

    def scalar(self, c: int) -> int:
        """Image of the integer c in the prime field."""
        return c % self.p

    # -- ring operations ---------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if not x:
            return y
        if not y:
            return x
        lx = self._log[x]
        z = self._zech[(self._log[y] - lx) % self.order]
        if z < 0:
            return 0
        return self._exp[(lx + z) % self.order]

    def neg(self, x: int) -> int:
        if self.p == 2 or not x:
            return x
        return self._exp[(self._log[x] + self._half) % self.order]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x and y:
            return self._exp[(self._log[x] + self._log[y]) % self.order]
        return 0

    def inv(self, x: int) -> int:
        if not x:
            raise DivisionByZero("inverse of zero")
        return self._exp[-self._log[x] % self.order]

    def div(self, x: int, y: int) -> int:
        if not y:
            raise DivisionByZero("division by zero")
        if not x:
            return 0
        return self._exp[(self._log[x] - self._log[y]) % self.order]

    def pow(self, x: int, e: int) -> int:
        if not x:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[self._log[x] * e % self.order]

    def times(self, c: int, x: int) -> int:
        """x added to itself c times."""
        return self.mul(self.scalar(c), x)

    # -- Frobenius and friends ---------------------------------------------

    def frobenius(self, x: int, j: int) -> int:
        """x ** (p ** j)."""
        if j < 0:
            raise ValueError("Frobenius exponent must be non-negative")
        if not x:
            return 0
        return self._exp[self._log[x] * self._ppow[j % self.n] % self.order]

    def frob_q(self, x: int, r: int = 1) -> int:
        """x ** (q ** r) with q = p ** k."""
        return self.frobenius(x, self.k * r % self.n)

    def t_sum(self, x: int, k: int, l: int) -> int:
        """x + x^(p^k) + ... + x^(p^(k(l-1)))."""
        acc = 0
        for i in range(l):
            acc = self.add(acc, self.frobenius(x, k * i % self.n))
        return acc

    def _divisor(self, d: int) -> int:
        if d < 1 or self.n % d:
            raise BadSubfield(f"d={d} does not divide n={self.n}")
        return d

    def rel_trace(self, x: int, d: int) -> int:
        """Trace from GF(p^n) down to GF(p^d)."""
        return self.t_sum(x, self._divisor(d), self.n // d)

    def rel_norm(self, x: int, d: int) -> int:
        """Norm from GF(p^n) down to GF(p^d)."""
        self._divisor(d)
        acc = 1
        for i in range(self.n // d):
            acc = self.mul(acc, self.frobenius(x, d * i))
        return acc

    def abs_trace(self, x: int) -> int:
        return self.t_sum(x, 1, self.n)

    def in_subfield(self, x: int, d: int) -> bool:
        """Membership in GF(Q) ∩ GF(p^d) = GF(p^gcd(n, d))."""
        return self.frobenius(x, math.gcd(self.n, d)) == x

    def subfield_elements(self, d: int) -> list[int]:
        """Sorted elements of GF(p^gcd(n, d)) inside GF(Q)."""
        e = math.gcd(self.n, d)
        size = self.p**e
        step = self.order // (size - 1)
        return sorted([0] + [self._exp[i * step] for i in range(size - 1)])

    # -- square roots ------------------------------------------------------

    def qr_indicator(self, x: int, d: int) -> Quadratic:
        """Quadratic character of x as an element of GF(p^d)."""
        if self.p == 2:
            raise OddCharOnly("quadratic residuosity needs odd p")
        self._divisor(d)
        if self.frobenius(x, d) != x:
            raise NotInSubfield(f"{x} is not in GF({self.p}^{d})")
        if not x:
            return Quadratic.ZERO
        if self.pow(x, (self.p**d - 1) // 2) == 1:
            return Quadratic.RESIDUE
        return Quadratic.NONRESIDUE

    def sqrt(self, x: int) -> int:
        """A square root of x; for odd p the smaller encoding of the pair."""
        if self.p == 2:
            return self.frobenius(x, self.n - 1)
        if not x:
            return 0
        if self.pow(x, self._half) != 1:
            raise NotASquare(f"{x} is not a square in GF({self.p}^{self.n})")
        # Tonelli-Shanks
        s, t = 0, self.order
        while t % 2 == 0:
            t //= 2
            s += 1
        c = self.pow(self._nonresidue, t)
        u = self.pow(x, t)
        r = self.pow(x, (t + 1) // 2)
        while u != 1:
            i, w = 0, u
            while w != 1:
                w = self.mul(w, w)
                i += 1
            b = self.pow(c, 1 << (s - i - 1))
            s = i
            c = self.mul(b, b)
            u = self.mul(u, c)
            r = self.mul(r, b)
        return min(r, self.neg(r))

    # -- characteristic 2 --------------------------------------------------

    def _artin_schreier_basis(self) -> dict[int, tuple[int, int]]:
        # echelon form of z -> z^2 + z over the bit basis; pivot -> (image, preimage)
        basis: dict[int, tuple[int, int]] = {}
        for i in range(self.n):
            e = 1 << i
            v, pre = self.mul(e, e) ^ e, e
            for b in reversed(range(self.n)):
                if not (v >> b) & 1:
                    continue
                if b in basis:
                    v ^= basis[b][0]
                    pre ^= basis[b][1]
                else:
                    basis[b] = (v, pre)
                    break
        return basis

    def artin_schreier_solve(self, c: int) -> list[int]:
        """All z in GF(2^n) with z^2 + z = c (empty or a pair {z, z + 1})."""
        if self.p != 2:
            raise OddCharNotSupported("z^2 + z = c is solved only for p = 2")
        v, z = c, 0
        for b in reversed(range(self.n)):
            if not (v >> b) & 1:
                continue
            if b not in self._as_basis:
                return []
            v ^= self._as_basis[b][0]
            z ^= self._as_basis[b][1]
        return sorted([z, z ^ 1])

    # -- GF(Q^2), p = 2 ----------------------------------------------------

    def _need_char2(self):
        if self.p != 2:
            raise OddCharNotSupported("the quadratic extension is implemented for p = 2 only")

    @property
    def ext_modulus(self) -> tuple[int, int, int]:
        """Coefficients (delta, 1, 1) of s^2 + s + delta."""
        self._need_char2()
        return (self.delta, 1, 1)

    def ext_add(self, x: Elt2, y: Elt2) -> Elt2:
        return Elt2(x.lo ^ y.lo, x.hi ^ y.hi)

    def ext_mul(self, x: Elt2, y: Elt2) -> Elt2:
        self._need_char2()
        mul = self.mul
        ac, bd = mul(x.lo, y.lo), mul(x.hi, y.hi)
        # s^2 = s + delta
        lo = ac ^ mul(bd, self.delta)
        hi = mul(x.lo, y.hi) ^ mul(x.hi, y.lo) ^ bd
        return Elt2(lo, hi)

    def ext_inv(self, x: Elt2) -> Elt2:
        self._need_char2()
        a, b = x
        norm = self.mul(a, a) ^ self.mul(a, b) ^ self.mul(self.mul(b, b), self.delta)
        if not norm:
            raise DivisionByZero("inverse of zero")
        ninv = self.inv(norm)
        return Elt2(self.mul(a ^ b, ninv), self.mul(b, ninv))

    def ext_pow(self, x: Elt2, e: int) -> Elt2:
        if e < 0:
            x, e = self.ext_inv(x), -e
        result = Elt2(1, 0)
        while e:
            if e & 1:
                result = self.ext_mul(result, x)
            x = self.ext_mul(x, x)
            e >>= 1
        return result

    def ext_frobenius(self, x: Elt2, j: int) -> Elt2:
        for _ in range(j):
            x = self.ext_mul(x, x)
        return x

    def ext_t_sum(self, x: Elt2, k: int, l: int) -> Elt2:
        acc = Elt2(0, 0)
        y = x
        for _ in range(l):
            acc = self.ext_add(acc, y)
            y = self.ext_frobenius(y, k)
        return acc

    def mu_zeta(self) -> Elt2:
        """First g^(Q-1) != 1 over candidates g in ascending encoding lo + Q*hi."""
        self._need_char2()
        one = Elt2(1, 0)
        # candidates with hi = 0 lie in GF(Q)* and give 1
        for code in range(self.Q, self.Q * self.Q):
            hi, lo = divmod(code, self.Q)
            z = self.ext_pow(Elt2(lo, hi), self.Q - 1)
            if z != one:
                return z
        raise AssertionError("mu_{Q+1} is trivial")  # pragma: no cover


@lru_cache(maxsize=64)
def _field_cached(spec: FieldSpec, modulus: Optional[tuple[int, ...]], max_q: int) -> Field:
    return Field(spec, modulus, max_q)


def field_create(
    spec: FieldSpec,
    modulus: Optional[Sequence[int]] = None,
    max_q: Optional[int] = None,
) -> Field:
    """Build (or reuse) the context for ``spec``; deterministic."""
    if max_q is None:
        max_q = max_q_from_env()
    if spec.Q > max_q:
        raise LimitExceeded(f"Q = {spec.p}^{spec.n} = {spec.Q} exceeds bound {max_q}")
    return _field_cached(spec, None if modulus is None else tuple(modulus), max_q)
