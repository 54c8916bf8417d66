"""Algebraic colorings of Kneser graph squares over finite fields."""

from ._kchroma import (
    Field,
    GroundSet,
    KchromaError,
    bounds_report,
    build_ground_set,
    check_ground_set,
    clique_witness,
    color_all,
    esym_naive,
    esym_prefix,
    exact_chromatic,
    find_prime_in_interval,
    greedy_chromatic,
    make_ground_set,
    verify_coloring,
)

__all__ = [
    "Field",
    "GroundSet",
    "KchromaError",
    "bounds_report",
    "build_ground_set",
    "check_ground_set",
    "clique_witness",
    "color_all",
    "esym_naive",
    "esym_prefix",
    "exact_chromatic",
    "find_prime_in_interval",
    "greedy_chromatic",
    "make_ground_set",
    "verify_coloring",
]
