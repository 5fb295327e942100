"""Superpatterns on small alphabets.

Pattern containment by dense-rank order isomorphism, classification and
exhaustive enumeration of superpatterns over two- and three-letter alphabets,
exact rational waiting-time distributions with their generating functions, and
a seeded Monte Carlo simulator.  See the README for the matching CLI.
"""

from .automaton import ContainmentAutomaton, get_automaton
from .classify import (
    COUNT_REPORT_HEADER,
    QUATERNARY_EXAMPLE,
    BudgetExceededError,
    ClassFlags,
    CountReport,
    SuperpatternNotFoundError,
    classify,
    count_beta_bruteforce,
    count_formulas,
    count_minimal_upto_iso,
    count_strict_minimal_upto_iso,
    count_strict_superpatterns,
    ends_with_minimum_superpattern,
    enumerate_minimal_upto_iso,
    enumerate_strict_minimal_upto_iso,
    has_flanking_pairs,
    is_superpattern,
    isomorphism_orbit,
    iter_minimal_upto_iso,
    iter_strict_minimal_upto_iso,
    iter_strict_superpatterns,
    iter_superpatterns,
    letter_multiplicities,
    min_superpattern_length,
    minimum_superpatterns_ternary,
    missing_patterns,
    strict_counts_by_length,
    verify_quaternary_counterexample,
)
from .patterns import (
    LetterPermutation,
    Pattern,
    Word,
    apply_letter_permutation,
    contains_pattern,
    contains_pattern_bruteforce,
    dense_rank,
    enumerate_preferential_arrangements,
    find_embedding,
    fubini,
    relabel_canonical,
)
from .series import Polynomial, RationalFunction, binomial, moments_from_gf
from .waiting import (
    PmfTable,
    SimSummary,
    binary_pmf,
    binary_waiting_time_gf,
    brute_force_pmf,
    coupon_expectations,
    pmf_table,
    simulate_tau,
    tau_online,
    ternary_pmf,
    ternary_waiting_time_gf,
    waiting_time_gf,
)

__version__ = "0.1.0"

__all__ = [
    "Word",
    "Pattern",
    "LetterPermutation",
    "dense_rank",
    "contains_pattern",
    "contains_pattern_bruteforce",
    "find_embedding",
    "enumerate_preferential_arrangements",
    "fubini",
    "relabel_canonical",
    "apply_letter_permutation",
    "ContainmentAutomaton",
    "get_automaton",
    "BudgetExceededError",
    "SuperpatternNotFoundError",
    "ClassFlags",
    "CountReport",
    "COUNT_REPORT_HEADER",
    "is_superpattern",
    "missing_patterns",
    "classify",
    "min_superpattern_length",
    "strict_counts_by_length",
    "count_strict_superpatterns",
    "iter_strict_superpatterns",
    "iter_superpatterns",
    "enumerate_minimal_upto_iso",
    "iter_minimal_upto_iso",
    "count_minimal_upto_iso",
    "enumerate_strict_minimal_upto_iso",
    "iter_strict_minimal_upto_iso",
    "count_strict_minimal_upto_iso",
    "isomorphism_orbit",
    "count_formulas",
    "count_beta_bruteforce",
    "letter_multiplicities",
    "has_flanking_pairs",
    "ends_with_minimum_superpattern",
    "minimum_superpatterns_ternary",
    "QUATERNARY_EXAMPLE",
    "verify_quaternary_counterexample",
    "Polynomial",
    "RationalFunction",
    "binomial",
    "moments_from_gf",
    "PmfTable",
    "SimSummary",
    "binary_pmf",
    "ternary_pmf",
    "brute_force_pmf",
    "tau_online",
    "simulate_tau",
    "pmf_table",
    "coupon_expectations",
    "binary_waiting_time_gf",
    "ternary_waiting_time_gf",
    "waiting_time_gf",
    "__version__",
]
