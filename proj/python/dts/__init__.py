"""Difference triangle set toolkit: greedy and algebraic constructions,
randomized improvement heuristics, exhaustive search, and verification."""

from ._dts import (
    asymptotic_construct,
    best_lower_bound,
    cfj_composition,
    compute_m,
    emit_dts,
    exists_dts,
    improve,
    klove_lower_bound,
    known_upper_bounds,
    next_prime_at_least,
    packing_to_triangle_set,
    parse_dts,
    positive_differences,
    reduce,
    set_greedy,
    shorten,
    singer_difference_set,
    transversal_greedy,
    trivial_lower_bound,
    verify_packing,
    verify_triangle_set,
    wythoff_connell,
    wythoff_pairs,
)

__all__ = [
    "asymptotic_construct",
    "best_lower_bound",
    "cfj_composition",
    "compute_m",
    "emit_dts",
    "exists_dts",
    "improve",
    "klove_lower_bound",
    "known_upper_bounds",
    "next_prime_at_least",
    "packing_to_triangle_set",
    "parse_dts",
    "positive_differences",
    "reduce",
    "set_greedy",
    "shorten",
    "singer_difference_set",
    "transversal_greedy",
    "trivial_lower_bound",
    "verify_packing",
    "verify_triangle_set",
    "wythoff_connell",
    "wythoff_pairs",
]
