#!/usr/bin/env python3
"""Regenerate src/bhsets/data/conway_polynomials.txt.

Standalone on purpose: it carries its own polynomial arithmetic so the
bundled database can be cross-checked by the package's independent
irreducibility/generator verification.

A Conway polynomial for GF(p^n) is the minimal monic primitive polynomial
of degree n over GF(p) under the standard ordering (compare the word
w_i = (-1)^(n-i) * c_i from the x^(n-1) coefficient down), subject to
norm-compatibility with the Conway polynomials of every proper subfield:
for each m | n, m < n, the degree-m Conway polynomial must vanish at
x^((p^n-1)/(p^m-1)) modulo the candidate.

Output format is one bracketed triple [p, n, [c0, c1, ..., 1]] per line
(coefficients low degree first), wrapped in the usual assignment header
and `0];` end marker.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

DEFAULT_MAX_ORDER = 2**22
DEFAULT_MAX_PRIME = 127


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_divisors(n: int) -> list[int]:
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


# Polynomials are tuples over GF(p), low degree first, no trailing zeros.
# The zero polynomial is the empty tuple.


def trim(c) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mulmod(a, b, mod, p):
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
    return trim(prod[:n])


def poly_powmod(base, exp, mod, p):
    result = (1,)
    b = base
    while exp:
        if exp & 1:
            result = poly_mulmod(result, b, mod, p)
        b = poly_mulmod(b, b, mod, p)
        exp >>= 1
    return result


def poly_rem(a, b, p):
    """Remainder of a divided by b (b nonzero)."""
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    for d in range(len(a) - 1, db - 1, -1):
        coef = a[d]
        if coef:
            c = coef * inv % p
            for k in range(db + 1):
                a[d - db + k] = (a[d - db + k] - c * b[k]) % p
    return trim(a)


def poly_gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_rem(a, b, p)
    return a


def poly_eval_mod(g, y, mod, p):
    """g(y) reduced modulo mod, by Horner."""
    acc = ()
    for coef in reversed(g):
        acc = poly_mulmod(acc, y, mod, p)
        if coef % p:
            lst = list(acc) if acc else [0]
            lst[0] = (lst[0] + coef) % p
            acc = trim(lst)
    return acc


def is_irreducible(f, p):
    n = len(f) - 1
    if n == 1:
        return True
    x = (0, 1)
    if poly_powmod(x, p**n, f, p) != x:
        return False
    for ell in prime_divisors(n):
        t = poly_powmod(x, p ** (n // ell), f, p)
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = poly_gcd(f, diff, p)
        if len(g) != 1:  # non-constant gcd (or zero: t == x)
            return False
    return True


def is_primitive_root_x(f, p, order_factors):
    n = len(f) - 1
    order = p**n - 1
    x = (0, 1)
    for ell in order_factors:
        if poly_powmod(x, order // ell, f, p) == (1,):
            return False
    return True


def compatible_with_subfields(f, p, n, table):
    x = (0, 1)
    for m in range(1, n):
        if n % m:
            continue
        y = poly_powmod(x, (p**n - 1) // (p**m - 1), f, p)
        if poly_eval_mod(table[(p, m)], y, f, p):
            return False
    return True


def conway_polynomial(p: int, n: int, table) -> tuple[int, ...]:
    """Smallest (in the alternating-word order) compatible primitive polynomial."""
    order_factors = prime_divisors(p**n - 1)
    for word in itertools.product(range(p), repeat=n):
        # word = (w_{n-1}, ..., w_0); coefficient c_i = (-1)^(n-i) * w_i
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for idx, w in enumerate(word):
            i = n - 1 - idx
            sign = -1 if (n - i) % 2 else 1
            coeffs[i] = (sign * w) % p
        f = tuple(coeffs)
        if f[0] == 0:
            continue  # divisible by x, never primitive
        if not is_irreducible(f, p):
            continue
        if not is_primitive_root_x(f, p, order_factors):
            continue
        if not compatible_with_subfields(f, p, n, table):
            continue
        return f
    raise RuntimeError(f"no Conway polynomial found for p={p}, n={n}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    ap.add_argument("--max-prime", type=int, default=DEFAULT_MAX_PRIME)
    ap.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent
        / "src"
        / "bhsets"
        / "data"
        / "conway_polynomials.txt",
    )
    args = ap.parse_args()

    table: dict[tuple[int, int], tuple[int, ...]] = {}
    rows = []
    for p in range(2, args.max_prime + 1):
        if not is_prime(p):
            continue
        n = 1
        while p**n <= args.max_order:
            f = conway_polynomial(p, n, table)
            table[(p, n)] = f
            rows.append((p, n, f))
            print(f"C_{{{p},{n}}} = {list(f)}", file=sys.stderr)
            n += 1

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w") as fh:
        fh.write("allConwayPolynomials := [\n")
        for p, n, f in rows:
            fh.write(f"[{p},{n},[{','.join(str(c) for c in f)}]],\n")
        fh.write("0];\n")
    print(f"wrote {len(rows)} polynomials to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
