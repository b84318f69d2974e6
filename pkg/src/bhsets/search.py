"""Diameter minimization, greedy B_h sequences, and exhaustive optima.

Constructed sets live on the circle Z/MZ; any j consecutive elements
unwrap to an integer B_h set whose span is the circular window length, so
minimum-diameter subsets reduce to window scans over dilations.  The
integer-side searches (greedy, exhaustive) share one incremental sum
ladder that tracks all multiset sums up to size h as bitmasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from pathlib import Path

import numpy as np

from .bh import is_bh_integer, units_mod
from .construct import CyclicSet, construct, field_for
from .classify import classify
from .errors import CapTooSmall, SizeExceedsSet
from .fields import PrimePower


@dataclass(frozen=True)
class SearchResult:
    """Best known span n for a k-element B_h set, with a verified witness."""

    k: int
    n: int
    witness: tuple[int, ...]
    provenance: dict

    def key(self):
        return (self.n, self.witness)


# ---------------------------------------------------------------------------
# circular windows


def _window_values(row, i, j, m):
    """The j-length circular window starting at index i, translated to start at 1."""
    k = len(row)
    base = row[i]
    return tuple((row[(i + t) % k] - base) % m + 1 for t in range(j))


def min_window(cset: CyclicSet, j: int):
    """Minimal span of j circularly consecutive elements.

    Returns (n, window) with the window unwrapped to integers starting at
    1; among equal-span windows the lexicographically least is returned.
    """
    k = len(cset)
    if not 1 <= j <= k:
        raise SizeExceedsSet(f"window size {j} not in [1, {k}]")
    m = cset.modulus
    row = cset.zero_based()
    best_n = None
    best_window = None
    for i in range(k):
        span = (row[(i + j - 1) % k] - row[i]) % m + 1
        if best_n is None or span < best_n:
            best_n, best_window = span, _window_values(row, i, j, m)
        elif span == best_n:
            w = _window_values(row, i, j, m)
            if w < best_window:
                best_window = w
    return best_n, best_window


def _reflect_window(window):
    n = window[-1]  # windows start at 1, so the last value is the span
    return tuple(sorted(n + 1 - x for x in window))


def _dilation_matrix(cset: CyclicSet):
    """Sorted residues of d*A for units d <= M/2 (the rest are reflections)."""
    m = cset.modulus
    if m <= 2:
        dils = [1]
    else:
        dils = [d for d in units_mod(m) if d <= m // 2]
    base = np.array(cset.zero_based(), dtype=np.int64)
    mat = np.sort(np.array(dils, dtype=np.int64)[:, None] * base[None, :] % m, axis=1)
    return np.array(dils, dtype=np.int64), mat


def _best_windows(mat, dils, m, j):
    """(n, witness, d, start) minimizing span then witness, over all rows."""
    k = mat.shape[1]
    idx = (np.arange(k) + j - 1) % k
    spans = (mat[:, idx] - mat) % m + 1
    n = int(spans.min())
    best = None
    for r, i in np.argwhere(spans == n):
        row = mat[r]
        w = _window_values(row.tolist(), int(i), j, m)
        rw = _reflect_window(w)
        d = int(dils[r])
        for cand, cd in ((w, d), (rw, (m - d) % m)):
            if best is None or cand < best[0]:
                best = (cand, cd, int(i))
    return n, best[0], best[1], best[2]


def best_affine_subset(cset: CyclicSet, j: int, *, h: int | None = None) -> SearchResult:
    """Minimal j-window span over every dilation of the set.

    Translations never change circular gaps, so only dilations are
    enumerated; d and M-d trace mirror-image circles, so only half the
    units are scanned and each window also competes as its reflection.
    The winning witness is verified B_h over the integers before return.
    """
    k = len(cset)
    if not 1 <= j <= k:
        raise SizeExceedsSet(f"window size {j} not in [1, {k}]")
    if h is None:
        if cset.meta is None:
            raise ValueError("pass h explicitly for sets without provenance")
        h = cset.meta.h
    dils, mat = _dilation_matrix(cset)
    n, witness, d, start = _best_windows(mat, dils, cset.modulus, j)
    assert is_bh_integer(witness, h), "window of a B_h set must stay B_h over Z"
    prov = {"d": d, "start": start}
    if cset.meta is not None:
        prov.update(
            family=cset.meta.family, h=cset.meta.h, q=cset.meta.q.q, b=cset.meta.b
        )
    return SearchResult(j, n, witness, prov)


# ---------------------------------------------------------------------------
# table scans


def _scan_candidates(family, h, q, k_max, mode, conway_db, skip=frozenset()):
    """Per-k best windows over all class representatives for one q."""
    qq = PrimePower.from_int(q)
    ctx = field_for(family, h, qq, conway_db)
    cls = classify(family, h, qq, mode, conway_db=conway_db)
    out = []
    for b in cls.representatives:
        if (qq.q, b) in skip:
            continue
        cset = construct(family, h, qq, b, ctx=ctx)
        dils, mat = _dilation_matrix(cset)
        per_k = {}
        for j in range(1, min(k_max, len(cset)) + 1):
            n, witness, d, start = _best_windows(mat, dils, cset.modulus, j)
            per_k[j] = {"n": n, "witness": list(witness), "d": d, "start": start}
        out.append((qq.q, b, cset.modulus, per_k))
    return out


def _load_checkpoint(path):
    done = {}
    p = Path(path)
    if p.exists():
        for line in p.read_text().splitlines():
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            done[(rec["q"], rec["b"])] = rec
    return done


def table_scan(
    h: int,
    family: str,
    q_list,
    k_max: int,
    *,
    mode: str = "fast",
    conway_db=None,
    jobs: int = 1,
    checkpoint=None,
    on_result=None,
) -> dict[int, SearchResult]:
    """Best span per target size k over all q and class-representative b.

    Results are reduced deterministically: (n, witness) is minimized, with
    earlier q winning exact ties, so worker count and checkpoint replay
    cannot change the outcome.  A checkpoint file (one JSON record per
    completed (q, b) dilation range) makes long scans resumable.
    """
    q_list = sorted(PrimePower.from_int(q).q for q in q_list)
    done = _load_checkpoint(checkpoint) if checkpoint else {}
    skip = frozenset(done)

    if jobs > 1 and len(q_list) > 1:
        from concurrent.futures import ProcessPoolExecutor

        db_key = str(conway_db) if conway_db is not None else None
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {
                q: pool.submit(_scan_candidates, family, h, q, k_max, mode, db_key, skip)
                for q in q_list
            }
            computed = {q: futures[q].result() for q in q_list}
    else:
        computed = {
            q: _scan_candidates(family, h, q, k_max, mode, conway_db, skip)
            for q in q_list
        }

    ck = open(checkpoint, "a") if checkpoint else None
    try:
        bests: dict[int, SearchResult] = {}
        for q in q_list:
            rows = sorted(computed[q] + _replay_checkpoint(q, done), key=lambda r: r[1])
            for qq, b, modulus, per_k in rows:
                if ck and (qq, b) not in done:
                    rec = {
                        "q": qq,
                        "b": b,
                        "d_range": [1, max(modulus - 1, 1)],
                        "results": {str(k): v for k, v in per_k.items()},
                    }
                    ck.write(json.dumps(rec) + "\n")
                    ck.flush()
                for k in sorted(per_k):
                    rec = per_k[k]
                    res = SearchResult(
                        k,
                        rec["n"],
                        tuple(rec["witness"]),
                        {
                            "family": family,
                            "h": h,
                            "q": qq,
                            "b": b,
                            "d": rec["d"],
                            "start": rec["start"],
                        },
                    )
                    if k not in bests or res.key() < bests[k].key():
                        bests[k] = res
                        if on_result:
                            on_result(res)
        for res in bests.values():
            assert is_bh_integer(res.witness, h)
        return bests
    finally:
        if ck:
            ck.close()


def _replay_checkpoint(q, done):
    rows = []
    for (cq, cb), rec in sorted(done.items()):
        if cq != q:
            continue
        per_k = {int(k): v for k, v in rec["results"].items()}
        modulus = rec["d_range"][1] + 1
        rows.append((cq, cb, modulus, per_k))
    return rows


# ---------------------------------------------------------------------------
# integer-side searches: shared incremental sum ladder


class SumLadder:
    """All multiset sums of sizes 0..h over a growing integer set.

    Level j holds every sum of a j-element multiset, as a value list plus
    a bitmask for O(1) collision checks.  While the set is B_h those sums
    are distinct at every level, and a candidate extension keeps it B_h
    iff none of the new sums (candidate used >= 1 time) collide with an
    existing or another new sum at any level.
    """

    def __init__(self, h):
        self.h = h
        self.values = [[0]] + [[] for _ in range(h)]
        self.masks = [1] + [0] * h

    def try_add(self, x) -> bool:
        h = self.h
        new_vals = []
        new_masks = []
        for j in range(1, h + 1):
            vals = []
            mask = 0
            ix = x
            for i in range(1, j + 1):
                for s in self.values[j - i]:
                    v = ix + s
                    bit = 1 << v
                    if (mask | self.masks[j]) & bit:
                        return False
                    mask |= bit
                    vals.append(v)
                ix += x
            # sums with i >= 1 copies of x also need sums of new multisets
            # at lower levels -- already covered since values[j-i] predates x
            new_vals.append(vals)
            new_masks.append(mask)
        for j in range(1, h + 1):
            self.values[j].extend(new_vals[j - 1])
            self.masks[j] |= new_masks[j - 1]
        return True

    def snapshot(self):
        return [len(v) for v in self.values], list(self.masks)

    def restore(self, snap):
        lengths, masks = snap
        for j, ln in enumerate(lengths):
            del self.values[j][ln:]
        self.masks = list(masks)


def greedy_bh(h: int, k_max: int, *, start: int = 1) -> tuple[int, ...]:
    """First k_max terms of the greedy B_h sequence.

    Starts at 1 by convention; pass start=0 for the zero-based variant
    (the same sequence shifted down by one, since the B_h property and the
    greedy choice are both translation invariant).  A rejected candidate
    stays rejected as the set grows, so the scan never revisits values.
    """
    if h < 2:
        raise ValueError("h must be >= 2")
    if k_max < 1:
        return ()
    ladder = SumLadder(h)
    ladder.try_add(1)
    seq = [1]
    x = 2
    while len(seq) < k_max:
        if ladder.try_add(x):
            seq.append(x)
        x += 1
    return tuple(v + start - 1 for v in seq)


# ---------------------------------------------------------------------------
# exhaustive minimum-span search


@dataclass(frozen=True)
class ExactResult:
    """Least span n admitting a k-element B_h set, with all witnesses.

    Witnesses are normalized to min = 0 and deduplicated up to reflection
    (each set and its mirror image are equivalent rulers); pass
    include_reflections=True to brute_force_optimal for the full list.
    """

    h: int
    k: int
    n: int
    witnesses: tuple[tuple[int, ...], ...]


def _enumerate_spans(h, size, n, want_all):
    """B_h sets with min 0, max n-1, exactly `size` elements.

    Only sets whose first gap is <= their last gap are enumerated; every
    reflection class has such a member (both members when the gaps tie),
    so nothing is lost after the up-to-reflection normalization.
    """
    if size == 1:
        return [(0,)] if n == 1 else []
    if n < 2:
        return []
    ladder = SumLadder(h)
    ladder.try_add(0)
    if not ladder.try_add(n - 1):
        return []
    found = []
    chosen = [0, n - 1]

    def dfs(last, remaining, first_mid):
        if remaining == 0:
            found.append(tuple(sorted(chosen)))
            return want_all
        for x in range(last + 1, n - remaining):
            if remaining == 1:
                limit = n - 1 - (first_mid if first_mid is not None else x)
                if x > limit:
                    break
            snap = ladder.snapshot()
            if ladder.try_add(x):
                chosen.append(x)
                keep_going = dfs(x, remaining - 1, first_mid if first_mid is not None else x)
                chosen.pop()
                ladder.restore(snap)
                if not keep_going:
                    return False
        return True

    dfs(0, size - 2, None)
    return found


def _reflect(w):
    top = w[-1]
    return tuple(sorted(top - x for x in w))


def brute_force_optimal(
    h: int, k: int, n_cap: int | None = None, *, include_reflections: bool = False
) -> ExactResult:
    """Exhaustive least-span search by iterative deepening.

    For each size up to k the span is deepened upward from the previous
    size's optimum plus one (spans strictly grow with size), so the first
    span admitting a witness is certified minimal.  Raises CapTooSmall if
    n_cap is exhausted first.
    """
    if h < 2:
        raise ValueError("h must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return ExactResult(h, 1, 1, ((0,),))
    prev = 1
    witnesses = None
    for size in range(2, k + 1):
        n = prev + 1
        while True:
            if n_cap is not None and n > n_cap:
                raise CapTooSmall(
                    f"no {size}-element B_{h} set fits within span cap {n_cap}"
                )
            found = _enumerate_spans(h, size, n, want_all=(size == k))
            if found:
                prev = n
                witnesses = found
                break
            n += 1
    canonical = sorted({min(w, _reflect(w)) for w in witnesses})
    if include_reflections:
        full = set()
        for w in canonical:
            full.add(w)
            full.add(_reflect(w))
        canonical = sorted(full)
    return ExactResult(h, k, prev, tuple(canonical))
