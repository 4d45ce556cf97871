"""Range scans: structured families, estimate-versus-actual, prime gaps.

Families group even numbers by factor shape, n = c * p with a fixed small
even coefficient c and a generating prime p larger than every prime factor
of c (so 210 = 30 * 7 belongs to "30p" but 90 = 30 * 3 does not), plus the
pure powers of two.  Scanning their prime-pair counts side by side exposes
how much factor overlap enriches the partition count.

Gap scans count prime pairs (x, x + d) for an even gap d; d = 2 is the twin
prime count.  All scans are deterministic: work items are pure functions of
n, and results merge in ascending order no matter how many threads run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .estimator import EstimateRecord, estimate_prime_pairs, survival_fraction
from .pairs import ORDERED, UNORDERED, prime_pair_count
from .sieve import shared_sieve, sieve_bound


@dataclass(frozen=True)
class Family:
    """A factor-shape family of even numbers.

    ``coefficient`` is the fixed even multiplier, or None for the powers of
    two.  Members are ascending, deduplicated, and at least 6 so that every
    member has a non-empty pair universe.
    """

    label: str
    coefficient: int | None


FAMILIES = {
    "2p": Family("2p", 2),
    "4p": Family("4p", 4),
    "6p": Family("6p", 6),
    "8p": Family("8p", 8),
    "10p": Family("10p", 10),
    "30p": Family("30p", 30),
    "pow2": Family("pow2", None),
}


@dataclass(frozen=True)
class ScanRecord:
    """One family member with its pair counts under both conventions."""

    family: str
    p: int | None
    n: int
    total_pairs: int
    ordered: int
    unordered: int
    survival: Fraction | None = None


@dataclass(frozen=True)
class TwinRecord:
    """One sampled point of a gap scan: exact count plus the estimate."""

    n: int
    pi2: int
    survival: Fraction
    bound: int

    @property
    def estimate_exact(self) -> Fraction:
        return (self.n // 2 - 2) * self.survival

    @property
    def estimate(self) -> float:
        return float(self.estimate_exact)


def _resolve_family(family) -> Family:
    if isinstance(family, Family):
        return family
    try:
        return FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}"
        ) from None


def _map_ordered(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def family_members(family, n_max: int) -> list[int]:
    """All members of the family that are <= n_max, ascending."""
    if n_max < 6:
        raise ValueError(f"n_max must be at least 6, got {n_max}")
    family = _resolve_family(family)
    if family.coefficient is None:
        members = []
        n = 8
        while n <= n_max:
            members.append(n)
            n *= 2
        return members
    c = family.coefficient
    largest_factor = max(q for q in (2, 3, 5) if c % q == 0)
    table = shared_sieve(max(n_max // c, 2))
    return [
        c * int(p)
        for p in table.primes
        if p > largest_factor and c * int(p) <= n_max and c * int(p) >= 6
    ]


def _family_record(family: Family, n: int) -> ScanRecord:
    p = n // family.coefficient if family.coefficient else None
    return ScanRecord(
        family.label,
        p,
        n,
        n // 2 - 2,
        prime_pair_count(n, ORDERED),
        prime_pair_count(n, UNORDERED),
    )


def family_scan(families, n_max: int, threads: int = 1) -> list[ScanRecord]:
    """One record per member per family, ordered by (label, n)."""
    if n_max < 10:
        raise ValueError(f"n_max must be at least 10, got {n_max}")
    resolved = sorted((_resolve_family(f) for f in families), key=lambda f: f.label)
    shared_sieve(n_max)  # one build instead of per-thread growth races
    work = [(f, n) for f in resolved for n in family_members(f, n_max)]
    return _map_ordered(lambda item: _family_record(*item), work, threads)


def estimate_vs_actual_scan(n_max: int, threads: int = 1) -> list[EstimateRecord]:
    """Estimate and actual ordered count for every n = 2p <= n_max, p >= 5."""
    if n_max < 10:
        raise ValueError(f"n_max must be at least 10, got {n_max}")
    table = shared_sieve(n_max)
    ns = [2 * int(p) for p in table.primes if p >= 5 and 2 * int(p) <= n_max]
    survival_fraction(sieve_bound(n_max))  # warm the chain before any fan-out
    return _map_ordered(lambda n: estimate_prime_pairs(n, with_actual=True), ns, threads)


def polignac_count(n: int, gap: int = 2) -> int:
    """Primes x with x + gap also prime and x + gap <= n; gap must be even."""
    if gap % 2 != 0 or gap < 2:
        raise ValueError(f"gap must be an even integer >= 2, got {gap}")
    if n < 5:
        raise ValueError(f"n must be at least 5, got {n}")
    if gap > n - 2:  # smallest prime start is 2, so x + gap <= n needs gap <= n - 2
        return 0
    flags = shared_sieve(n).prime_flags
    return int(np.count_nonzero(flags[: n - gap + 1] & flags[gap : n + 1]))


def twin_scan(
    n_max: int,
    gap: int = 2,
    dense_limit: int = 10_000,
    sparse_stride: int = 50,
) -> list[TwinRecord]:
    """Gap-pair counts with the pair estimate at sampled even n up to n_max.

    Sampling is every even n from 10 through ``dense_limit`` and every
    ``sparse_stride`` beyond, which keeps large scans cheap while the trend
    stays visible.
    """
    if n_max < 10:
        raise ValueError(f"n_max must be at least 10, got {n_max}")
    if gap % 2 != 0 or gap < 2:
        raise ValueError(f"gap must be an even integer >= 2, got {gap}")
    if sparse_stride % 2 != 0:
        raise ValueError(f"sparse_stride must be even to keep samples even, got {sparse_stride}")
    table = shared_sieve(n_max)
    flags = table.prime_flags
    cumulative = None
    if gap <= n_max - 2:
        pair_starts = flags[: n_max - gap + 1] & flags[gap : n_max + 1]
        cumulative = np.cumsum(pair_starts)  # count of pairs with x <= index
    samples = list(range(10, min(n_max, dense_limit) + 1, 2))
    if n_max > dense_limit:
        start = dense_limit + sparse_stride - dense_limit % sparse_stride
        samples.extend(range(start, n_max + 1, sparse_stride))
    records = []
    for n in samples:
        count = int(cumulative[n - gap]) if cumulative is not None and n >= gap else 0
        bound = sieve_bound(n)
        records.append(TwinRecord(n, count, survival_fraction(bound), bound))
    return records
