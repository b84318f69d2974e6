"""B_h sets from finite fields.

Construct the Bose and Singer families of B_h sets, decide affine
equivalence of their parameters, search affine images and subsets for
minimum-diameter integer B_h sets, and evaluate the classical span/size
bounds.  See the README for the CLI surface.
"""

from .bh import (
    AffineMap,
    BhCheck,
    affinely_equivalent,
    apply_affine,
    canonical_form,
    diameter,
    is_bh_cyclic,
    is_bh_integer,
    span_needed,
)
from .bounds import BoundReport, conditional_bounds, constructive_bound, unconditional_bounds
from .classify import (
    BClassification,
    CertificationReport,
    bose_b_classes,
    certify_inequivalence,
    singer_b_classes,
)
from .construct import BhParams, CyclicSet, bose, singer, valid_b_values
from .errors import BhSetsError
from .fields import FieldCtx, PrimePower, build_field, shared_field
from .search import (
    ExactResult,
    SearchResult,
    best_affine_subset,
    brute_force_optimal,
    greedy_bh,
    min_window,
    table_scan,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BClassification",
    "BhCheck",
    "BhParams",
    "BhSetsError",
    "BoundReport",
    "CertificationReport",
    "CyclicSet",
    "ExactResult",
    "FieldCtx",
    "PrimePower",
    "SearchResult",
    "affinely_equivalent",
    "apply_affine",
    "best_affine_subset",
    "bose",
    "bose_b_classes",
    "brute_force_optimal",
    "build_field",
    "canonical_form",
    "certify_inequivalence",
    "conditional_bounds",
    "constructive_bound",
    "diameter",
    "greedy_bh",
    "is_bh_cyclic",
    "is_bh_integer",
    "min_window",
    "shared_field",
    "singer",
    "singer_b_classes",
    "span_needed",
    "table_scan",
    "unconditional_bounds",
    "valid_b_values",
]
