"""Evaluators for the size/span tradeoff bounds.

Two directions share one report type: upper bounds on the least span n
admitting a k-element B_h set (min-span), and lower bounds on the largest
B_h set inside [1, n] (max-size).  Formula regimes differ by which
prime-gap input they lean on:

  unconditional  valid for every k >= 4, n >= h+3
  large-k        valid beyond an explicit but astronomical threshold
  bhp            valid for sufficiently large inputs, threshold ineffective
  rh             valid assuming the Riemann Hypothesis

Formula evaluation uses interval arithmetic (192-bit mantissa) and reports
the safe endpoint: rounded up for upper bounds, down for lower bounds, so
the reported number is itself a true bound whenever the formula is.  The
constructive route is exact integer arithmetic: pick the least admissible
prime power and take the resulting set's modulus.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import iv, mp

from .primes import next_prime_power

PRECISION_BITS = 192
iv.prec = PRECISION_BITS

REGIMES = ("unconditional", "large-k", "bhp", "rh")

_HYPOTHESES = {
    "unconditional": "none: valid for all k >= 4 and n >= h+3",
    "large-k": "requires k (resp. n) > e^(e^34); stated for completeness only",
    "bhp": "requires k, n sufficiently large; no effective threshold is known",
    "rh": "assumes the Riemann Hypothesis",
    "constructive": "none: achieved by an explicit construction",
}

_MIN_SPAN_FORMULAS = {
    "unconditional": "k^h + 3^(155h) k^(h-1/155)",
    "large-k": "k^h + (3k)^(h-1/3)",
    "bhp": "k^h + 2^h k^(h-19/40)",
    "rh": "k^h + log(20k) k^(h-1/2) + 2 k^(h-1) log(20k)^(2h)",
}

_MAX_SIZE_FORMULAS = {
    "unconditional": "n^(1/h) - 2^44 n^(154/(155h))",
    "large-k": "n^(1/h) - 7 n^(2/(3h))",
    "bhp": "n^(1/h) - n^(21/(40h))",
    "rh": "n^(1/h) - (7 + log(n)/h) n^(1/(2h))",
}


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound with its applicability conditions attached."""

    h: int
    kind: str  # "min-span-upper" | "max-size-lower" | "constructive"
    regime: str
    value: object  # exact int (constructive) or mpf endpoint
    hypotheses: str
    k: int | None = None
    n: int | None = None
    formula: str | None = None
    vacuous: bool = False
    q: int | None = None
    family: str | None = None

    def value_str(self, digits: int = 30) -> str:
        if isinstance(self.value, int):
            return str(self.value)
        return mp.nstr(self.value, digits)


def _ivint(x) -> "iv.mpf":
    return iv.mpf(int(x))


def _frac(a, b) -> "iv.mpf":
    return _ivint(a) / _ivint(b)


def _min_span_interval(h, k, regime):
    kk = _ivint(k)
    hh = _ivint(h)
    main = kk**hh
    if regime == "unconditional":
        return main + _ivint(3) ** _ivint(155 * h) * kk ** (hh - _frac(1, 155))
    if regime == "large-k":
        return main + (_ivint(3) * kk) ** (hh - _frac(1, 3))
    if regime == "bhp":
        return main + _ivint(2) ** hh * kk ** (hh - _frac(19, 40))
    if regime == "rh":
        lg = iv.log(_ivint(20) * kk)
        return main + lg * kk ** (hh - _frac(1, 2)) + _ivint(2) * kk ** (hh - _ivint(1)) * lg ** _ivint(2 * h)
    raise ValueError(f"unknown regime {regime!r}")


def _max_size_interval(h, n, regime):
    nn = _ivint(n)
    hh = _ivint(h)
    main = nn ** (_ivint(1) / hh)
    if regime == "unconditional":
        return main - _ivint(2) ** _ivint(44) * nn ** _frac(154, 155 * h)
    if regime == "large-k":
        return main - _ivint(7) * nn ** _frac(2, 3 * h)
    if regime == "bhp":
        return main - nn ** _frac(21, 40 * h)
    if regime == "rh":
        return main - (_ivint(7) + iv.log(nn) / hh) * nn ** _frac(1, 2 * h)
    raise ValueError(f"unknown regime {regime!r}")


def _endpoint(x) -> "mp.mpf":
    with mp.workprec(PRECISION_BITS):
        return mp.mpf(x)


def _formula_pair(h, k, n, regime):
    if h < 2:
        raise ValueError("h must be >= 2")
    if k < 4 or n < h + 3:
        raise ValueError("formula regimes assume k >= 4 and n >= h+3")
    upper = _endpoint(_min_span_interval(h, k, regime).b)  # round up: stays an upper bound
    lower = _endpoint(_max_size_interval(h, n, regime).a)  # round down: stays a lower bound
    vacuous = lower <= 0
    up = BoundReport(
        h=h,
        kind="min-span-upper",
        regime=regime,
        value=upper,
        hypotheses=_HYPOTHESES[regime],
        k=k,
        formula=_MIN_SPAN_FORMULAS[regime],
    )
    low = BoundReport(
        h=h,
        kind="max-size-lower",
        regime=regime,
        value=mp.mpf(0) if vacuous else lower,
        hypotheses=_HYPOTHESES[regime],
        n=n,
        formula=_MAX_SIZE_FORMULAS[regime],
        vacuous=vacuous,
    )
    return up, low


def unconditional_bounds(h: int, k: int, n: int) -> tuple[BoundReport, BoundReport]:
    """The always-valid formula pair (min-span upper, max-size lower)."""
    return _formula_pair(h, k, n, "unconditional")


def conditional_bounds(h: int, k: int, n: int, regime: str) -> tuple[BoundReport, BoundReport]:
    """Formula pair under a stated hypothesis; the hypothesis text rides along."""
    regime = regime.lower()
    if regime not in ("large-k", "bhp", "rh"):
        raise ValueError(f"regime must be one of large-k, bhp, rh (got {regime!r})")
    return _formula_pair(h, k, n, regime)


def constructive_bound(h: int, k: int) -> BoundReport:
    """Exact span achieved by the cheapest applicable explicit construction.

    For k <= 3 the optimum is closed-form (1, 2, h+2).  Otherwise the
    least prime power q >= k gives a q-element set modulo q^h - 1, and the
    least q >= k-1 gives a (q+1)-element set modulo (q^(h+1)-1)/(q-1);
    the smaller modulus wins.
    """
    if h < 2:
        raise ValueError("h must be >= 2")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k <= 3:
        value = (1, 2, h + 2)[k - 1]
        return BoundReport(
            h=h,
            kind="constructive",
            regime="constructive",
            value=value,
            hypotheses="none: closed form for k <= 3",
            k=k,
        )
    q_bose = next_prime_power(k)
    bose_val = q_bose**h - 1
    q_singer = next_prime_power(k - 1)
    singer_val = (q_singer ** (h + 1) - 1) // (q_singer - 1)
    if singer_val < bose_val:
        value, q, family = singer_val, q_singer, "singer"
    else:
        value, q, family = bose_val, q_bose, "bose"
    return BoundReport(
        h=h,
        kind="constructive",
        regime="constructive",
        value=value,
        hypotheses=_HYPOTHESES["constructive"],
        k=k,
        q=q,
        family=family,
    )
