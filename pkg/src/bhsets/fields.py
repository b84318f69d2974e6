"""Exact arithmetic in GF(p^n) with a full discrete-logarithm table.

A field context presents GF(p^n) as GF(p)[x]/(C) for a monic degree-n
modulus C whose residue class theta = x generates the multiplicative
group.  Elements are plain tuples of n integers in [0, p), coordinates in
the power basis 1, theta, ..., theta^(n-1); the zero element is the
all-zero tuple.  The context is immutable once built and safe to share
across workers.

Two independent routes exist on purpose: multiplication reduces honestly
modulo C, while dlog/exp answer through the table built by iterating
multiplication by theta.  Tests play the routes against each other.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import conway
from .errors import (
    CapacityExceeded,
    DimensionMismatch,
    DivisionByZero,
    LogOfZero,
    NotGenerator,
    NotIrreducible,
    SubfieldMismatch,
)
from .primes import as_prime_power, is_prime, prime_factors

#: Orders above this refuse to build a table; override via build_field(max_order=...).
#: Integer arithmetic itself is arbitrary precision, so the budget is memory only.
DEFAULT_MAX_ORDER = 1 << 22

FieldElem = tuple  # coefficient vector over GF(p), length n


@dataclass(frozen=True)
class PrimePower:
    """q = p**e with p prime, e >= 1."""

    p: int
    e: int
    q: int

    def __post_init__(self):
        if self.e < 1 or not is_prime(self.p):
            raise ValueError(f"not a prime power: {self.p}^{self.e}")
        if self.q != self.p**self.e:
            raise ValueError(f"inconsistent prime power: {self.p}^{self.e} != {self.q}")

    @classmethod
    def from_int(cls, q) -> "PrimePower":
        if isinstance(q, PrimePower):
            return q
        pe = as_prime_power(q)
        if pe is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(pe[0], pe[1], q)

    def __str__(self):
        return str(self.q)


# ---------------------------------------------------------------------------
# polynomials over GF(p): tuples, lowest degree first, no trailing zeros
# (the zero polynomial is the empty tuple)


def _trim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mulmod(a, b, mod, p):
    if not a or not b:
        return ()
    n = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, n - 1, -1):
        coef = prod[d]
        if coef:
            prod[d] = 0
            for k in range(n):
                prod[d - n + k] = (prod[d - n + k] - coef * mod[k]) % p
    return _trim(prod[:n])


def _poly_powmod(base, exp, mod, p):
    result = (1,)
    b = base
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, b, mod, p)
        b = _poly_mulmod(b, b, mod, p)
        exp >>= 1
    return result


def _poly_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    for d in range(len(a) - 1, db - 1, -1):
        coef = a[d]
        if coef:
            c = coef * inv % p
            for k in range(db + 1):
                a[d - db + k] = (a[d - db + k] - c * b[k]) % p
    return _trim(a)


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def is_irreducible(coeffs, p) -> bool:
    """Rabin test for a monic polynomial over GF(p)."""
    f = _trim(coeffs)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = (0, 1)
    if _poly_powmod(x, p**n, f, p) != x:
        return False
    for ell in prime_factors(n):
        t = _poly_powmod(x, p ** (n // ell), f, p)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, diff, p)
        if len(g) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldCtx:
    """Immutable presentation of GF(p^n) with generator theta and dlog table."""

    __slots__ = ("p", "n", "order", "modulus", "exp", "source", "_dlog", "_subfields")

    def __init__(self, p, n, modulus, exp, dlog, source):
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = modulus
        self.exp = exp
        self.source = source
        self._dlog = dlog
        self._subfields = {}

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.n}), modulus={list(self.modulus)}, source={self.source!r})"

    # -- element constructors --

    def element(self, coeffs) -> FieldElem:
        t = tuple(c % self.p for c in coeffs)
        if len(t) != self.n:
            raise DimensionMismatch(f"expected {self.n} coefficients, got {len(t)}")
        return t

    def zero(self) -> FieldElem:
        return (0,) * self.n

    def one(self) -> FieldElem:
        return (1,) + (0,) * (self.n - 1)

    def scalar(self, c) -> FieldElem:
        """The prime-field constant c as a field element."""
        return (c % self.p,) + (0,) * (self.n - 1)

    @property
    def theta(self) -> FieldElem:
        return self.exp[1 % (self.order - 1)]

    def _key(self, x) -> int:
        k = 0
        for c in reversed(x):
            k = k * self.p + c
        return k

    def _check(self, x):
        if len(x) != self.n:
            raise DimensionMismatch(f"expected {self.n} coefficients, got {len(x)}")

    # -- arithmetic (reduces modulo the modulus polynomial; no table use) --

    def add(self, a, b) -> FieldElem:
        self._check(a)
        self._check(b)
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b) -> FieldElem:
        self._check(a)
        self._check(b)
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a) -> FieldElem:
        self._check(a)
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b) -> FieldElem:
        self._check(a)
        self._check(b)
        p, n, mod = self.p, self.n, self.modulus
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for d in range(2 * n - 2, n - 1, -1):
            coef = prod[d]
            if coef:
                prod[d] = 0
                for k in range(n):
                    prod[d - n + k] = (prod[d - n + k] - coef * mod[k]) % p
        return tuple(prod[:n])

    def pow(self, a, k: int) -> FieldElem:
        self._check(a)
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a) -> FieldElem:
        self._check(a)
        if not any(a):
            raise DivisionByZero("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    # -- table routes --

    def dlog(self, x) -> int:
        """Exponent a in [0, p^n - 2] with theta**a == x."""
        self._check(x)
        if not any(x):
            raise LogOfZero("zero is not a power of the generator")
        return self._dlog[self._key(x)]

    # -- subfield structure --

    def _subfield(self, q) -> PrimePower:
        qq = PrimePower.from_int(q)
        if qq.p != self.p or self.n % qq.e:
            raise SubfieldMismatch(f"GF({qq.q}) is not a subfield of GF({self.p}^{self.n})")
        return qq

    def subfield_elements(self, q) -> list:
        """All elements of the subfield GF(q), zero first."""
        qq = self._subfield(q)
        if qq.q not in self._subfields:
            step = (self.order - 1) // (qq.q - 1)
            self._subfields[qq.q] = [self.zero()] + [
                self.exp[j * step % (self.order - 1)] for j in range(qq.q - 1)
            ]
        return self._subfields[qq.q]

    def algebraic_degree(self, x, q) -> int:
        """Smallest d >= 1 with x**(q**d) == x; the degree of x over GF(q)."""
        qq = self._subfield(q)
        self._check(x)
        limit = self.n // qq.e
        y = x
        for d in range(1, limit + 1):
            y = self.pow(y, qq.q)
            if y == x:
                return d
        raise AssertionError("element degree did not divide the extension degree")

    def in_subfield(self, x, q) -> bool:
        qq = self._subfield(q)
        self._check(x)
        return not any(x) or self.pow(x, qq.q) == x

    def power_degree(self, b: int, q) -> int:
        """Degree of theta**b over GF(q), by exponent arithmetic alone.

        Same answer as algebraic_degree(exp[b], q) but without field
        multiplications: d is minimal with b*q^d == b mod (p^n - 1).
        """
        qq = self._subfield(q)
        m = self.order - 1
        b %= m if m else 1
        cur = b * qq.q % m
        d = 1
        while cur != b:
            cur = cur * qq.q % m
            d += 1
        return d


# ---------------------------------------------------------------------------


def _verify_generator(modulus, p, n):
    """theta must have order exactly p^n - 1 (checked against each maximal divisor)."""
    m = p**n - 1
    x = (0, 1) if n > 1 else ((-modulus[0]) % p,)
    for ell in prime_factors(m):
        if _poly_powmod(x, m // ell, modulus, p) == (1,):
            raise NotGenerator(
                f"x has order dividing {m}//{ell} modulo the given polynomial"
            )


def build_field(p, n, override=None, *, conway_db=None, max_order=DEFAULT_MAX_ORDER) -> FieldCtx:
    """Build GF(p^n) with its exp/dlog tables.

    The modulus comes from the Conway polynomial database unless `override`
    (a monic degree-n coefficient sequence, lowest degree first) is given.
    Either way it is verified irreducible with x a multiplicative
    generator before the table is filled.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > max_order:
        raise CapacityExceeded(
            f"GF({p}^{n}) has order {p**n} > table budget {max_order}"
        )

    if override is not None:
        modulus = tuple(int(c) for c in override)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("override modulus must be monic of degree n")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("override modulus coefficients must lie in [0, p)")
        source = "user-supplied"
    else:
        modulus = conway.conway_polynomial(p, n, conway_db)
        source = "conway-db"

    if not is_irreducible(modulus, p):
        raise NotIrreducible(f"{list(modulus)} factors over GF({p})")
    _verify_generator(modulus, p, n)

    # exp table by iterated multiplication by theta; one O(n) shift per step
    m = p**n - 1
    theta_reduce = tuple((-modulus[k]) % p for k in range(n))  # x^n in the power basis
    exp = [None] * m
    dlog = {}
    cur = (1,) + (0,) * (n - 1)
    key_weights = [p**i for i in range(n)]
    for a in range(m):
        exp[a] = cur
        dlog[sum(c * w for c, w in zip(cur, key_weights))] = a
        carry = cur[n - 1]
        shifted = (0,) + cur[: n - 1]
        if carry:
            cur = tuple((s + carry * t) % p for s, t in zip(shifted, theta_reduce))
        else:
            cur = shifted
    if cur != exp[0]:
        raise NotGenerator("theta order verification failed during table build")
    if len(dlog) != m:
        raise NotGenerator("powers of theta collide; table is not a bijection")

    return FieldCtx(p, n, modulus, exp, dlog, source)


@functools.lru_cache(maxsize=128)
def _shared(p, n, db_key):
    return build_field(p, n, conway_db=db_key)


def shared_field(p, n, conway_db=None) -> FieldCtx:
    """Memoized build_field for the common no-override case."""
    db_key = str(conway_db) if conway_db is not None else None
    return _shared(p, n, db_key)
