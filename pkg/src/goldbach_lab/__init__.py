"""Exact Goldbach partition counting, closed-form formulas, and estimates.

The library has three routes to the same quantities and keeps them apart on
purpose: enumeration oracles (:mod:`goldbach_lab.pairs`), closed-form counts
(:mod:`goldbach_lab.formulas`), and the exact-rational survival estimator
(:mod:`goldbach_lab.estimator`).  Scans and the claim audit compare the
routes at scale.
"""

__version__ = "0.1.0"

from .audit import Claim, ClaimOutcome, run_audit
from .estimator import (
    EstimateRecord,
    estimate_nonprime_pairs,
    estimate_prime_pairs,
    growth_delta,
    recurrence_residual,
    removal_fraction,
    survival_fraction,
)
from .formulas import (
    BreakdownReport,
    FormulaValue,
    asymptotic_only_by,
    asymptotic_only_by_exact,
    breakdown_report,
    formula_divisible,
    formula_table,
)
from .pairs import (
    NON_PRIME,
    ORDERED,
    PRIME_PAIR,
    UNORDERED,
    Breakdown,
    PairClass,
    breakdown,
    classify_pair,
    divisible_overlap_count,
    divisible_pair_count,
    only_by_count,
    prime_pair_count,
    prime_pair_list,
    total_odd_pairs,
)
from .scans import (
    FAMILIES,
    Family,
    ScanRecord,
    TwinRecord,
    estimate_vs_actual_scan,
    family_members,
    family_scan,
    polignac_count,
    twin_scan,
)
from .serialize import emit, format_decimal, format_rational, render_csv, render_json
from .sieve import (
    SieveCoverageError,
    SieveTable,
    build_sieve,
    is_prime,
    largest_prime_below,
    next_prime_above,
    shared_sieve,
    sieve_bound,
)

__all__ = [
    "Breakdown",
    "BreakdownReport",
    "Claim",
    "ClaimOutcome",
    "EstimateRecord",
    "FAMILIES",
    "Family",
    "FormulaValue",
    "NON_PRIME",
    "ORDERED",
    "PRIME_PAIR",
    "PairClass",
    "ScanRecord",
    "SieveCoverageError",
    "SieveTable",
    "TwinRecord",
    "UNORDERED",
    "asymptotic_only_by",
    "asymptotic_only_by_exact",
    "breakdown",
    "breakdown_report",
    "build_sieve",
    "classify_pair",
    "divisible_overlap_count",
    "divisible_pair_count",
    "emit",
    "estimate_nonprime_pairs",
    "estimate_prime_pairs",
    "estimate_vs_actual_scan",
    "family_members",
    "family_scan",
    "format_decimal",
    "format_rational",
    "formula_divisible",
    "formula_table",
    "growth_delta",
    "is_prime",
    "largest_prime_below",
    "next_prime_above",
    "only_by_count",
    "polignac_count",
    "prime_pair_count",
    "prime_pair_list",
    "recurrence_residual",
    "removal_fraction",
    "render_csv",
    "render_json",
    "run_audit",
    "shared_sieve",
    "sieve_bound",
    "survival_fraction",
    "total_odd_pairs",
    "twin_scan",
]
