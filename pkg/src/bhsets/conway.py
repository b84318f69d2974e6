"""Loader for the Conway polynomial database.

The bundled file (and any user-supplied replacement) uses the list format
of Luebeck's published tables: one `[p, n, [c0, c1, ..., 1]]` triple per
line with coefficients lowest degree first, optionally wrapped in an
assignment header and terminated by a `0];` end marker.  The loader only
cares about the bracketed triples, so whitespace, the header, and the end
marker are all tolerated.
"""

from __future__ import annotations

import functools
import re
from importlib import resources
from pathlib import Path

from .errors import UnknownConwayPolynomial

_ENTRY_RE = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*,\s*\[([0-9,\s]*)\]\s*\]")


def parse_db(text: str) -> dict[tuple[int, int], tuple[int, ...]]:
    """Parse database text into {(p, n): coefficient tuple}."""
    db = {}
    for match in _ENTRY_RE.finditer(text):
        p, n = int(match.group(1)), int(match.group(2))
        coeffs = tuple(int(c) for c in match.group(3).replace(" ", "").split(",") if c)
        if len(coeffs) != n + 1 or coeffs[-1] != 1:
            raise ValueError(f"malformed database entry for p={p}, n={n}: {coeffs}")
        if any(not 0 <= c < p for c in coeffs):
            raise ValueError(f"database entry for p={p}, n={n} has coefficients outside [0, {p})")
        db[(p, n)] = coeffs
    if not db:
        raise ValueError("no database entries found")
    return db


@functools.lru_cache(maxsize=8)
def load_db(path: str | None = None) -> dict[tuple[int, int], tuple[int, ...]]:
    """Load a database file, or the bundled copy when path is None."""
    if path is None:
        text = (resources.files("bhsets") / "data" / "conway_polynomials.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_db(text)


def conway_polynomial(p: int, n: int, db=None) -> tuple[int, ...]:
    """Coefficients of the Conway polynomial for GF(p^n), lowest degree first.

    `db` may be a path, a pre-parsed dict, or None for the bundled copy.
    """
    if isinstance(db, dict):
        table = db
    else:
        table = load_db(str(db) if db is not None else None)
    try:
        return table[(p, n)]
    except KeyError:
        raise UnknownConwayPolynomial(
            f"no database entry for GF({p}^{n}); supply an override modulus"
        ) from None
