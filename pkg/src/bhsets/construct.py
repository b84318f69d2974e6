"""The Bose and Singer B_h set families.

Both families pick a base point theta^b in a finite field and read off the
exponents of an affine pencil through it:

  bose(h, q, b):   exponents a with theta^a = theta^b + v, v in GF(q),
                   inside GF(q^h); modulus q^h - 1; q elements.
  singer(h, q, b): exponents a with theta^a = u*theta^b + v, u,v in GF(q)
                   not both zero, inside GF(q^(h+1)); reduced modulo
                   (q^(h+1)-1)/(q-1); q+1 elements.

Residues are reported in [1, M] with M standing in for the zero class,
which keeps printed sets identical to the usual published form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeTooLow
from .fields import FieldCtx, PrimePower, shared_field


@dataclass(frozen=True)
class BhParams:
    """Provenance of a constructed set: family, h, q, and reduced base exponent."""

    family: str  # "bose" | "singer"
    h: int
    q: PrimePower
    b: int

    def __post_init__(self):
        if self.family not in ("bose", "singer"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.h < 2:
            raise ValueError("h must be >= 2")


@dataclass(frozen=True)
class CyclicSet:
    """A set of residues modulo M, sorted ascending.

    Constructors in this module use representatives in [1, M]; the affine
    canonical form uses [0, M-1].  `meta` carries construction provenance
    when the set came from one of the families.
    """

    modulus: int
    elements: tuple[int, ...]
    meta: BhParams | None = field(default=None, compare=False)

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        if len(set(e % self.modulus for e in elems)) != len(elems):
            raise ValueError("elements collide modulo the modulus")
        if any(not 0 <= e <= self.modulus for e in elems):
            raise ValueError(f"residues must lie in [0, {self.modulus}]")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def zero_based(self) -> tuple[int, ...]:
        """Elements as residues in [0, M-1]."""
        return tuple(sorted(e % self.modulus for e in self.elements))

    def one_based(self) -> tuple[int, ...]:
        """Elements as residues in [1, M] (M represents the zero class)."""
        return tuple(
            sorted(self.modulus if e % self.modulus == 0 else e % self.modulus for e in self.elements)
        )


def _rep(a: int, m: int) -> int:
    """Representative of a mod m in [1, m]."""
    r = a % m
    return m if r == 0 else r


def field_for(family: str, h: int, q, conway_db=None) -> FieldCtx:
    """The ambient field of the family: GF(q^h) for bose, GF(q^(h+1)) for singer."""
    qq = PrimePower.from_int(q)
    ext = h if family == "bose" else h + 1
    return shared_field(qq.p, qq.e * ext, conway_db)


def bose(h: int, q, b: int, *, ctx: FieldCtx | None = None, conway_db=None) -> CyclicSet:
    """The q-element B_h set {a mod q^h-1 : theta^a = theta^b + v, v in GF(q)}.

    b is accepted unreduced and taken modulo q^h - 1; theta^b must have
    degree h over GF(q) (DegreeTooLow otherwise).
    """
    qq = PrimePower.from_int(q)
    if h < 2:
        raise ValueError("h must be >= 2")
    if ctx is None:
        ctx = field_for("bose", h, qq, conway_db)
    m = qq.q**h - 1
    b %= m
    if b == 0 or ctx.power_degree(b, qq) != h:
        raise DegreeTooLow(
            f"theta^{b} has degree {1 if b == 0 else ctx.power_degree(b, qq)} < {h} over GF({qq.q})"
        )
    base = ctx.exp[b]
    elems = {_rep(ctx.dlog(ctx.add(base, v)), m) for v in ctx.subfield_elements(qq)}
    cset = CyclicSet(m, tuple(elems), BhParams("bose", h, qq, b))
    assert len(cset) == qq.q, "construction must yield exactly q elements"
    return cset


def singer(h: int, q, b: int, *, ctx: FieldCtx | None = None, conway_db=None) -> CyclicSet:
    """The (q+1)-element B_h set from the pencil u*theta^b + v in GF(q^(h+1)).

    Exponents are reduced modulo M = (q^(h+1)-1)/(q-1); b is accepted
    unreduced and taken modulo M; theta^b must have degree h+1 over GF(q).
    """
    qq = PrimePower.from_int(q)
    if h < 2:
        raise ValueError("h must be >= 2")
    if ctx is None:
        ctx = field_for("singer", h, qq, conway_db)
    m = (qq.q ** (h + 1) - 1) // (qq.q - 1)
    b %= m
    if b == 0 or ctx.power_degree(b, qq) != h + 1:
        raise DegreeTooLow(
            f"theta^{b} has degree {1 if b == 0 else ctx.power_degree(b, qq)} < {h + 1} over GF({qq.q})"
        )
    base = ctx.exp[b]
    sub = ctx.subfield_elements(qq)
    elems = set()
    for u in sub:
        ub = ctx.mul(u, base)
        for v in sub:
            if u == ctx.zero() and v == ctx.zero():
                continue
            elems.add(_rep(ctx.dlog(ctx.add(ub, v)), m))
    cset = CyclicSet(m, tuple(elems), BhParams("singer", h, qq, b))
    assert len(cset) == qq.q + 1, "construction must yield exactly q+1 elements"
    return cset


def construct(family: str, h: int, q, b: int, *, ctx=None, conway_db=None) -> CyclicSet:
    """Dispatch to bose() or singer() by family name."""
    if family == "bose":
        return bose(h, q, b, ctx=ctx, conway_db=conway_db)
    if family == "singer":
        return singer(h, q, b, ctx=ctx, conway_db=conway_db)
    raise ValueError(f"unknown family {family!r}")


def candidate_window(family: str, h: int, q) -> int:
    """Upper end of the canonical b window: every b reduces into [1, window]."""
    qq = PrimePower.from_int(q)
    if family == "bose":
        return (qq.q**h - 1) // (qq.q - 1)
    return (qq.q ** (h + 1) - 1) // (qq.q - 1)


def valid_b_values(h: int, q, family: str, *, ctx: FieldCtx | None = None, conway_db=None) -> tuple[int, ...]:
    """All admissible b in the canonical window, ascending.

    Admissible means theta^b has degree h (bose) or h+1 (singer) over
    GF(q); shifting b by the window length only scales theta^b by a
    GF(q) unit, so this window covers every parameter up to equivalence.
    """
    qq = PrimePower.from_int(q)
    if ctx is None:
        ctx = field_for(family, h, qq, conway_db)
    window = candidate_window(family, h, qq)
    want = h if family == "bose" else h + 1
    return tuple(b for b in range(1, window + 1) if ctx.power_degree(b, qq) == want)
