"""Closed-form pair counts and their asymptotic per-prime products.

These are the formula route: cheap arithmetic predictions of how many pairs
(x, n - x) have a coordinate divisible by an odd prime p.  With P = (n/2) - 2,

* p divides n:      (P + 2) / p, an exact integer equal to n / (2p);
* p does not:       2 * floor((P - (p - 1)/2) / p), clamped at zero.

The oracle route in :mod:`goldbach_lab.pairs` counts the same sets by
enumeration; keeping the two apart makes formula-versus-truth deviation a
measurable quantity rather than an assumption.  ``asymptotic_only_by`` gives
the limiting count of pairs struck first by p, as an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import pairs
from .sieve import shared_sieve, sieve_bound

DIVIDES = "divides"
NOT_DIVIDES = "not_divides"


@dataclass(frozen=True)
class FormulaValue:
    """One closed-form count, tagged with which divisibility case applied.

    ``exact`` is false only if the divides-case division left a remainder,
    which cannot happen for an odd prime dividing an even n; the flag guards
    callers that generalize the formula.
    """

    n: int
    p: int
    case: str
    value: int
    exact: bool = True


@dataclass(frozen=True)
class BreakdownReport:
    """Formula and oracle columns side by side for every witness prime.

    ``rows`` holds (p, formula, divisible_oracle, only_by_oracle); ``total``
    sums the only-by column.
    """

    n: int
    rows: tuple[tuple[int, int, int, int], ...]
    total: int


def formula_divisible(n: int, p: int) -> FormulaValue:
    """Closed-form count of pairs with a coordinate divisible by p."""
    pairs._check_even_n(n)
    table = shared_sieve(max(n, p))
    pairs._check_odd_prime(p, table)
    total = n // 2 - 2
    if n % p == 0:
        value, remainder = divmod(n, 2 * p)
        return FormulaValue(n, p, DIVIDES, value, exact=remainder == 0)
    raw = (total - (p - 1) // 2) // p  # floor, may go negative near the bound
    return FormulaValue(n, p, NOT_DIVIDES, max(0, 2 * raw))


def formula_table(n: int, through_prime: int | None = None) -> list[FormulaValue]:
    """Formula values for every odd prime up to sieve_bound(n), ascending.

    ``through_prime`` extends the table past the bound on request, e.g. to
    inspect a prime whose formula value is positive even though it can no
    longer witness any pair.  For even n < 10 there is no bound and the
    table is empty.
    """
    pairs._check_even_n(n)
    if n < 10:
        return []
    top = sieve_bound(n)
    if through_prime is not None:
        top = max(top, through_prime)
    table = shared_sieve(max(n, top))
    return [formula_divisible(n, p) for p in table.odd_primes_upto(top)]


def asymptotic_only_by_exact(n: int, p: int) -> Fraction:
    """Limiting count of pairs struck first by p, as an exact rational.

    P * (2/p) * prod over odd primes q < p of (q - 2)/q.  Defined only when
    p does not divide n; when it does, the x and y multiples coincide and
    the product form does not apply.
    """
    pairs._check_even_n(n, minimum=10)
    table = shared_sieve(max(n, p))
    pairs._check_odd_prime(p, table)
    if n % p == 0:
        raise ValueError(f"asymptotic only-by count does not apply when p divides n (p={p}, n={n})")
    value = Fraction(2, p)
    for q in table.odd_primes_upto(p - 1):
        value *= Fraction(q - 2, q)
    return (n // 2 - 2) * value


def asymptotic_only_by(n: int, p: int) -> float:
    """Float form of :func:`asymptotic_only_by_exact`."""
    return float(asymptotic_only_by_exact(n, p))


def breakdown_report(n: int) -> BreakdownReport:
    """Join the formula column with both oracle columns for n."""
    oracle = pairs.breakdown(n)
    rows = []
    for (p, only_by), formula in zip(oracle.rows, formula_table(n)):
        rows.append((p, formula.value, pairs.divisible_pair_count(n, p), only_by))
    return BreakdownReport(n, tuple(rows), oracle.total)
