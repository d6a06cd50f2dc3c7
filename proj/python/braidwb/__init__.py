"""Braid monodromy workbench: factorizations of the full twist, Hurwitz
equivalence, van Kampen presentations and monodromy enumeration."""

from ._braidwb import (
    BraidWord,
    CuspidalFactor,
    CuspidalFactorization,
    Error,
    ParseError,
    abelianization,
    apply_move,
    chisini_bound,
    chisini_guaranteed,
    conjugate_all,
    curve_invariants,
    enumerate_reps,
    equals,
    equivalent,
    euler_characteristic,
    exponent_sum,
    fingerprint,
    full_twist,
    load_factorization,
    morphism_report,
    normal_form,
    parse_factorization,
    permutation_of,
    presentation,
    replay_matches,
    serialize,
    simplify,
    singularity_counts,
    verify_full_twist,
)

__all__ = [name for name in dir() if not name.startswith("_")]

