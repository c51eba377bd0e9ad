"""Toolkit for the modular-method treatment of x^2 +- q^alpha * p^n = y^n.

The pieces: exact integer arithmetic, Weierstrass model invariants and local
reduction data, classification of signature (n, n, 2) ternary instances with
their attached curves, genus/newform-space dimensions for X0(N), symbolic
non-existence certificates, and exhaustive desk-scale searches.
"""

from .arith import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    integer_nth_root,
    is_perfect_square,
    is_prime,
    padic_valuation,
    square_decomposition,
)
from .certify import Certificate, FamilySpec, certify, derive_parity_facts, derive_ternary
from .corpus import random_instances
from .dimensions import (
    NEWFORM_FREE_LEVELS,
    DimensionRecord,
    DimensionTable,
    dim_s2_new,
    genus_X0,
    verify_no_newform_levels,
)
from .frey import (
    Case,
    FreyAnalysis,
    TernaryInstance,
    analyze,
    build_frey,
    classify,
    normalize,
    validate,
)
from .search import SearchConfig, SearchReport, Witness, search_family, search_lebesgue
from .weierstrass import (
    CurveInvariants,
    LocalReduction,
    WeierstrassCurve,
    ap_trace,
    compute_invariants,
    is_minimal_at,
    reduction_type,
    reduction_type_at_2,
)

__version__ = "0.1.0"

__all__ = [
    "Case",
    "Certificate",
    "CurveInvariants",
    "DimensionRecord",
    "DimensionTable",
    "Factorization",
    "FamilySpec",
    "FreyAnalysis",
    "LocalReduction",
    "NEWFORM_FREE_LEVELS",
    "SearchConfig",
    "SearchReport",
    "TernaryInstance",
    "WeierstrassCurve",
    "Witness",
    "analyze",
    "ap_trace",
    "build_frey",
    "certify",
    "classify",
    "compute_invariants",
    "derive_parity_facts",
    "derive_ternary",
    "dim_s2_new",
    "divisors",
    "euler_phi",
    "factorize",
    "genus_X0",
    "integer_nth_root",
    "is_minimal_at",
    "is_perfect_square",
    "is_prime",
    "normalize",
    "padic_valuation",
    "random_instances",
    "reduction_type",
    "reduction_type_at_2",
    "search_family",
    "search_lebesgue",
    "square_decomposition",
    "validate",
    "verify_no_newform_levels",
]
