"""Affine-equivalence classification of the b parameter.

Equivalent parameters produce affinely equivalent sets, so scans only need
one representative per class.  Merges come from three sources per family,
applied as stages over the candidate window with a union-find:

  bose:   'iii' multiply b by the field characteristic;
          'ii'  b ~ dlog(theta^b + v) for v in GF(q) (theta^b - theta^e
                lands in GF(q) exactly for those e).
  singer: 'v'   multiply b by the characteristic;
          'vi'  the same subfield-difference fiber as bose 'ii';
          'vii-restricted'  e = -dlog(theta^b + w) mod M  (the scaled
                reciprocal pencil with the two leading scalars pinned);
          'vii-full'        the full three-scalar sweep, collapsed by the
                GF(q)-scalar freedom that dlog enjoys modulo M.

Every merge is recorded (b, e, tag) before compression so it can be
re-audited; `certify_inequivalence` then checks representatives pairwise
by explicit affine search and folds in any pair the stage criteria missed
(tag 'direct').
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .bh import affinely_equivalent
from .construct import CyclicSet, candidate_window, construct, field_for, valid_b_values
from .fields import FieldCtx, PrimePower


class UnionFind:
    """Union-find over an explicit universe, with path compression."""

    def __init__(self, universe):
        self.parent = {x: x for x in universe}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        """Merge the classes of a and b; True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:  # keep the smaller label as root so minima fall out directly
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def n_classes(self) -> int:
        return sum(1 for x, p in self.parent.items() if x == p)

    def classes(self) -> list[tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return [tuple(sorted(g)) for g in sorted(groups.values(), key=min)]


@dataclass(frozen=True)
class BClassification:
    """Partition of the admissible b window into affine-equivalence classes."""

    family: str
    h: int
    q: PrimePower
    classes: tuple[tuple[int, ...], ...]
    merges: tuple[tuple[int, int, str], ...]
    stages: tuple[str, ...]
    counts_after_stage: tuple[int, ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(min(c) for c in self.classes)

    def n_classes(self) -> int:
        return len(self.classes)


def _window_rep(x: int, window: int) -> int:
    r = x % window
    return window if r == 0 else r


def _apply_stage(uf, merges, candidates, pair_iter, tag) -> None:
    for b, e in pair_iter:
        if e != b and e in candidates and uf.union(b, e):
            merges.append((b, e, tag))


def bose_b_classes(h: int, q, *, ctx: FieldCtx | None = None, conway_db=None) -> BClassification:
    """Classify bose parameters for (h, q).

    The window [1, (q^h-1)/(q-1)] already absorbs window-length shifts of
    b, so the stages are the characteristic multiply ('iii') and the
    subfield-difference fiber ('ii').
    """
    qq = PrimePower.from_int(q)
    if ctx is None:
        ctx = field_for("bose", h, qq, conway_db)
    window = candidate_window("bose", h, qq)
    m = qq.q**h - 1
    candidates = valid_b_values(h, qq, "bose", ctx=ctx)
    cand_set = set(candidates)
    uf = UnionFind(candidates)
    merges: list[tuple[int, int, str]] = []
    stages = ["window"]
    counts = [len(candidates)]

    _apply_stage(
        uf,
        merges,
        cand_set,
        ((b, _window_rep(ctx.p * b % m, window)) for b in candidates),
        "iii",
    )
    stages.append("iii")
    counts.append(uf.n_classes())

    sub = ctx.subfield_elements(qq)
    _apply_stage(
        uf,
        merges,
        cand_set,
        (
            (b, _window_rep(ctx.dlog(ctx.add(ctx.exp[b], v)), window))
            for b in candidates
            for v in sub
        ),
        "ii",
    )
    stages.append("ii")
    counts.append(uf.n_classes())

    return BClassification(
        "bose", h, qq, tuple(uf.classes()), tuple(merges), tuple(stages), tuple(counts)
    )


def singer_b_classes(
    h: int, q, mode: str = "fast", *, ctx: FieldCtx | None = None, conway_db=None
) -> BClassification:
    """Classify singer parameters for (h, q); mode is 'fast' or 'full'.

    Fast mode stops after the pinned-scalar stage 'vii-restricted'.  Full
    mode adds the complete scalar sweep: any e with
    r*theta^b + t*theta^(e+b) + w*theta^e in GF(q), (r, t) != (0, 0),
    satisfies e = dlog(s - r'*theta^b) - dlog(t'*theta^b + w') mod M for
    scalars with t' != 0, and GF(q)-scalar factors vanish modulo M, so the
    reachable e are exactly differences u - v with
    u in {0} U {dlog(c - theta^b)} and v in {0} U {dlog(theta^b + c)}.
    """
    if mode not in ("fast", "full"):
        raise ValueError("mode must be 'fast' or 'full'")
    qq = PrimePower.from_int(q)
    if ctx is None:
        ctx = field_for("singer", h, qq, conway_db)
    window = candidate_window("singer", h, qq)  # == the set modulus M
    candidates = valid_b_values(h, qq, "singer", ctx=ctx)
    cand_set = set(candidates)
    uf = UnionFind(candidates)
    merges: list[tuple[int, int, str]] = []
    stages = ["window"]
    counts = [len(candidates)]

    full_order = ctx.order - 1
    _apply_stage(
        uf,
        merges,
        cand_set,
        ((b, _window_rep(ctx.p * b % full_order, window)) for b in candidates),
        "v",
    )
    stages.append("v")
    counts.append(uf.n_classes())

    sub = ctx.subfield_elements(qq)
    _apply_stage(
        uf,
        merges,
        cand_set,
        (
            (b, _window_rep(ctx.dlog(ctx.add(ctx.exp[b], v)), window))
            for b in candidates
            for v in sub
        ),
        "vi",
    )
    stages.append("vi")
    counts.append(uf.n_classes())

    _apply_stage(
        uf,
        merges,
        cand_set,
        (
            (b, _window_rep(-ctx.dlog(ctx.add(ctx.exp[b], w)), window))
            for b in candidates
            for w in sub
        ),
        "vii-restricted",
    )
    stages.append("vii-restricted")
    counts.append(uf.n_classes())

    if mode == "full":

        def full_pairs():
            for b in candidates:
                tb = ctx.exp[b]
                us = [0] + [
                    ctx.dlog(ctx.sub(c, tb)) % window for c in sub
                ]  # c - theta^b is never zero: theta^b sits outside GF(q)
                vs = [0] + [ctx.dlog(ctx.add(tb, c)) % window for c in sub]
                for u in us:
                    for v in vs:
                        if u or v:
                            yield b, _window_rep(u - v, window)

        _apply_stage(uf, merges, cand_set, full_pairs(), "vii-full")
        stages.append("vii-full")
        counts.append(uf.n_classes())

    return BClassification(
        "singer", h, qq, tuple(uf.classes()), tuple(merges), tuple(stages), tuple(counts)
    )


def classify(family: str, h: int, q, mode: str = "fast", *, conway_db=None) -> BClassification:
    if family == "bose":
        return bose_b_classes(h, q, conway_db=conway_db)
    if family == "singer":
        return singer_b_classes(h, q, mode, conway_db=conway_db)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CertificationReport:
    """Pairwise affine check over class representatives."""

    classification: BClassification
    pairs_checked: int
    equivalent_pairs: tuple[tuple[int, int], ...] = field(default=())

    @property
    def all_inequivalent(self) -> bool:
        return not self.equivalent_pairs


def certify_inequivalence(
    cls: BClassification, *, ctx: FieldCtx | None = None, conway_db=None
) -> CertificationReport:
    """Check all representative pairs with the explicit affine search.

    An equivalent pair means the stage criteria were not exhaustive for
    this (h, q); such pairs are merged into the classification under the
    tag 'direct' and reported.
    """
    if ctx is None:
        ctx = field_for(cls.family, cls.h, cls.q, conway_db)
    reps = cls.representatives
    sets: dict[int, CyclicSet] = {
        b: construct(cls.family, cls.h, cls.q, b, ctx=ctx) for b in reps
    }
    found: list[tuple[int, int]] = []
    pairs = 0
    for i, b in enumerate(reps):
        for e in reps[i + 1 :]:
            pairs += 1
            if affinely_equivalent(sets[b], sets[e]) is not None:
                found.append((b, e))

    if not found:
        return CertificationReport(cls, pairs)

    uf = UnionFind(reps)
    for b, e in found:
        uf.union(b, e)
    rep_class = {b: uf.find(b) for b in reps}
    regrouped: dict[int, list[int]] = {}
    for members in cls.classes:
        root = rep_class[min(members)]
        regrouped.setdefault(root, []).extend(members)
    merged_classes = tuple(tuple(sorted(g)) for g in sorted(regrouped.values(), key=min))
    merged = replace(
        cls,
        classes=merged_classes,
        merges=cls.merges + tuple((b, e, "direct") for b, e in found),
        stages=cls.stages + ("direct",),
        counts_after_stage=cls.counts_after_stage + (len(merged_classes),),
    )
    return CertificationReport(merged, pairs, tuple(found))
