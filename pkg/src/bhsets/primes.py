"""Integer primality, factoring, and prime-power helpers.

Everything here is exact and deterministic: Miller-Rabin with the known
witness set that is provably correct below 3.3 * 10^24, and factoring by
trial division with a primality early-exit on the cofactor.  That is all
the number theory the field tables and bound evaluators need; inputs stay
well inside the deterministic range.
"""

from __future__ import annotations

# Witnesses certifying Miller-Rabin for all n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: multiplicity} by trial division.

    The cofactor is tested for primality after each found factor, so the
    quadratic worst case only bites for n that are products of two large
    primes; callers here factor group orders at table scale (< 2^48).
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while n > 1:
        if is_prime(n):
            factors[n] = factors.get(n, 0) + 1
            break
        while f * f <= n:
            if n % f == 0:
                factors[f] = factors.get(f, 0) + 1
                n //= f
                break
            # wheel over 6k +/- 1
            f += 2 if f % 6 == 5 else 4
        else:
            factors[n] = factors.get(n, 0) + 1
            break
    return factors


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n, ascending."""
    return tuple(sorted(factorize(n)))


def integer_root(n: int, e: int) -> int:
    """Largest r with r**e <= n (exact integer arithmetic)."""
    if n < 0 or e < 1:
        raise ValueError("integer_root expects n >= 0, e >= 1")
    if n in (0, 1) or e == 1:
        return n
    r = int(round(n ** (1.0 / e)))
    while r > 1 and r**e > n:
        r -= 1
    while (r + 1) ** e <= n:
        r += 1
    return r


def as_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, e) with p prime and p**e == n, or None."""
    if n < 2:
        return None
    if is_prime(n):
        return (n, 1)
    for e in range(2, n.bit_length()):
        r = integer_root(n, e)
        if r**e == n and is_prime(r):
            return (r, e)
    return None


def next_prime_power(n: int) -> int:
    """Smallest prime power >= n."""
    m = max(n, 2)
    while as_prime_power(m) is None:
        m += 1
    return m
