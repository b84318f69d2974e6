"""B_h verification, affine maps on Z/MZ, canonical forms, and equivalence.

A set is B_h when all h-element multiset sums are distinct.  Affine maps
a -> d*a + s with gcd(d, M) = 1 preserve that property, so sets split into
affine orbits; `canonical_form` picks a distinguished orbit member and
`affinely_equivalent` produces an explicit witness map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import gcd

from .construct import CyclicSet
from .errors import ModulusMismatch, NotAUnit


@dataclass(frozen=True)
class BhCheck:
    """Outcome of a B_h test; truthy iff the property holds.

    On failure `collision` holds two distinct h-multisets with equal sum.
    """

    ok: bool
    collision: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AffineMap:
    """a -> d*a + s modulo m, with d a unit."""

    d: int
    s: int
    m: int

    def __post_init__(self):
        if gcd(self.d, self.m) != 1:
            raise NotAUnit(f"gcd({self.d}, {self.m}) != 1")

    def __call__(self, a: int) -> int:
        return (self.d * a + self.s) % self.m


def units_mod(m: int) -> list[int]:
    """All units of Z/mZ in [1, m-1], ascending."""
    return [d for d in range(1, m) if gcd(d, m) == 1]


def as_intset(elements) -> tuple[int, ...]:
    """Validate and sort a set of nonnegative integers."""
    elems = tuple(sorted(elements))
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    if elems and elems[0] < 0:
        raise ValueError("elements must be nonnegative")
    return elems


def _bh_check(elements, h, modulus=None) -> BhCheck:
    seen: dict[int, tuple] = {}
    for combo in combinations_with_replacement(sorted(elements), h):
        s = sum(combo)
        if modulus is not None:
            s %= modulus
        other = seen.get(s)
        if other is not None:
            return BhCheck(False, (other, combo))
        seen[s] = combo
    return BhCheck(True)


def is_bh_cyclic(cset: CyclicSet, h: int) -> BhCheck:
    """Do all h-fold multiset sums stay distinct modulo the set modulus?"""
    if h < 1:
        raise ValueError("h must be >= 1")
    return _bh_check(cset.elements, h, cset.modulus)


def is_bh_integer(elements, h: int) -> BhCheck:
    """Same test over the integers (no modulus)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    return _bh_check(as_intset(elements), h)


def apply_affine(cset: CyclicSet, amap: AffineMap) -> CyclicSet:
    """Elementwise d*a + s mod M, re-sorted, representatives in [1, M]."""
    if amap.m != cset.modulus:
        raise ModulusMismatch(f"map modulus {amap.m} != set modulus {cset.modulus}")
    m = cset.modulus
    images = set()
    for a in cset.elements:
        r = amap(a)
        images.add(m if r == 0 else r)
    out = CyclicSet(m, tuple(images), cset.meta)
    assert len(out) == len(cset)
    return out


def _gap_sequence(sorted_zero_based, m):
    k = len(sorted_zero_based)
    return tuple(
        (sorted_zero_based[(i + 1) % k] - sorted_zero_based[i]) % m for i in range(k)
    )


def _min_rotation(seq):
    k = len(seq)
    return min(tuple(seq[i:] + seq[:i]) for i in range(k))


def canonical_form(cset: CyclicSet) -> CyclicSet:
    """Lexicographically least affine image, written with residues in [0, M-1].

    Translation is normalized for free: among all translates of a dilated
    set, the lex-least sorted sequence is the prefix-sum of the lex-least
    rotation of its circular gap sequence (gaps are translation invariant).
    So one rotation scan per dilation replaces the M-fold shift loop.
    Two sets have equal canonical forms iff they are affinely equivalent.
    """
    if not cset.elements:
        raise ValueError("canonical_form of an empty set")
    m = cset.modulus
    if m == 1:
        return CyclicSet(1, (0,))
    base = cset.zero_based()
    best = None
    for d in units_mod(m):
        gaps = _gap_sequence(sorted(d * a % m for a in base), m)
        rot = _min_rotation(gaps)
        if best is None or rot < best:
            best = rot
    acc = 0
    elems = [0]
    for g in best[:-1]:
        acc += g
        elems.append(acc)
    return CyclicSet(m, tuple(elems))


def affinely_equivalent(a: CyclicSet, b: CyclicSet) -> AffineMap | None:
    """A witness map sending a onto b, or None if no affine map does.

    Scans every dilation; a sorted-gap-multiset mismatch rules a dilation
    out before any shift is tried.
    """
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"{a.modulus} != {b.modulus}")
    m = a.modulus
    if len(a) != len(b):
        return None
    a0 = a.zero_based()
    b0 = b.zero_based()
    if m == 1:
        return AffineMap(1 % m if m > 1 else 0, 0, m) if a0 == b0 else None
    bset = set(b0)
    b_gapkey = tuple(sorted(_gap_sequence(b0, m)))
    for d in units_mod(m):
        da = sorted(d * x % m for x in a0)
        if tuple(sorted(_gap_sequence(da, m))) != b_gapkey:
            continue
        base = da[0]
        for t in b0:
            s = (t - base) % m
            if all((x + s) % m in bset for x in da):
                return AffineMap(d, s, m)
    return None


def diameter(elements) -> int:
    """max - min of an integer set."""
    elems = as_intset(elements)
    if not elems:
        raise ValueError("diameter of an empty set")
    return elems[-1] - elems[0]


def span_needed(elements) -> int:
    """Length of the shortest interval [1, n] containing a translate: max - min + 1."""
    return diameter(elements) + 1
