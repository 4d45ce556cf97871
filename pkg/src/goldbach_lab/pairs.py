"""Exact enumeration over the odd-pair universe of an even number.

For even n >= 6 the universe is every ordered pair (x, n - x) with x odd and
3 <= x <= n - 3; there are (n/2) - 2 of them.  Each pair is either a prime
pair (both coordinates prime) or a non-prime pair, in which case it is
assigned to its smallest odd witness prime: the least odd prime p dividing a
coordinate other than p itself.  Witness primes never exceed
``sieve_bound(n)``, so the per-prime tallies form a finite breakdown whose
total complements the prime-pair count.

Everything here is ground truth by enumeration; closed-form counterparts
live in :mod:`goldbach_lab.formulas` so the two routes stay comparable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sieve import SieveTable, shared_sieve, sieve_bound

PRIME_PAIR = "prime_pair"
NON_PRIME = "non_prime"

ORDERED = "ordered"
UNORDERED = "unordered"


@dataclass(frozen=True)
class PairClass:
    """Classification of one ordered pair (x, y) with x + y = n."""

    x: int
    y: int
    kind: str
    assigned_prime: int | None = None


@dataclass(frozen=True)
class Breakdown:
    """Per-witness-prime tallies of the non-prime pairs of one n.

    ``rows`` holds (prime, count) for every odd prime up to sieve_bound(n),
    ascending, zero counts included.  Counts are over ordered pairs.
    """

    n: int
    rows: tuple[tuple[int, int], ...]
    total: int
    convention: str = ORDERED


def _check_even_n(n: int, minimum: int = 6) -> None:
    if n % 2 != 0 or n < minimum:
        raise ValueError(f"n must be an even integer >= {minimum}, got {n}")


def _check_convention(convention: str) -> None:
    if convention not in (ORDERED, UNORDERED):
        raise ValueError(f"convention must be {ORDERED!r} or {UNORDERED!r}, got {convention!r}")


def _check_odd_prime(p: int, table: SieveTable) -> None:
    if p < 3 or p % 2 == 0 or not table.is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def _universe(n: int) -> np.ndarray:
    return np.arange(3, n - 2, 2, dtype=np.int64)


def _witnesses(n: int, table: SieveTable) -> np.ndarray:
    """Witness prime per pair, with n + 1 as the prime-pair sentinel."""
    xs = _universe(n)
    spf = table.spf
    sx = spf[xs].astype(np.int64)
    sy = spf[n - xs].astype(np.int64)
    wx = np.where(sx != xs, sx, n + 1)
    wy = np.where(sy != n - xs, sy, n + 1)
    return np.minimum(wx, wy)


def total_odd_pairs(n: int) -> int:
    """Size of the pair universe: (n/2) - 2."""
    _check_even_n(n)
    return n // 2 - 2


def classify_pair(n: int, x: int) -> PairClass:
    """Classify the single pair (x, n - x)."""
    _check_even_n(n)
    if x % 2 == 0 or x < 3 or x > n - 3:
        raise ValueError(f"x must be odd with 3 <= x <= n - 3, got x={x} for n={n}")
    y = n - x
    table = shared_sieve(n)
    witness = None
    for coord in (x, y):
        f = table.smallest_prime_factor(coord)
        if f != coord:  # composite coordinate
            witness = f if witness is None else min(witness, f)
    if witness is None:
        return PairClass(x, y, PRIME_PAIR)
    return PairClass(x, y, NON_PRIME, witness)


def prime_pair_count(n: int, convention: str = ORDERED) -> int:
    """Number of prime pairs summing to n, under the given convention."""
    _check_even_n(n)
    _check_convention(convention)
    table = shared_sieve(n)
    a = table.prime_flags[3 : n - 2 : 2]
    ordered = int(np.count_nonzero(a & a[::-1]))
    if convention == ORDERED:
        return ordered
    half = n // 2
    diagonal = 1 if (half % 2 == 1 and table.is_prime(half)) else 0
    return (ordered + diagonal) // 2


def prime_pair_list(n: int, convention: str = ORDERED) -> list[tuple[int, int]]:
    """All prime pairs summing to n, lexicographically ascending."""
    _check_even_n(n)
    _check_convention(convention)
    table = shared_sieve(n)
    a = table.prime_flags[3 : n - 2 : 2]
    xs = _universe(n)[a & a[::-1]]
    if convention == UNORDERED:
        xs = xs[xs <= n - xs]
    return [(int(x), int(n - x)) for x in xs]


def divisible_pair_count(n: int, p: int) -> int:
    """Pairs where p divides a coordinate other than p itself.

    Counted by enumerating the whole universe, independent of the factor
    table, so it can referee the closed-form route.
    """
    _check_even_n(n)
    table = shared_sieve(max(n, p))
    _check_odd_prime(p, table)
    xs = _universe(n)
    ys = n - xs
    mask = ((xs % p == 0) & (xs != p)) | ((ys % p == 0) & (ys != p))
    return int(np.count_nonzero(mask))


def divisible_overlap_count(n: int, p: int, q: int) -> int:
    """Pairs satisfying the divisibility predicate for both p and q."""
    _check_even_n(n)
    table = shared_sieve(max(n, p, q))
    _check_odd_prime(p, table)
    _check_odd_prime(q, table)
    xs = _universe(n)
    ys = n - xs
    by_p = ((xs % p == 0) & (xs != p)) | ((ys % p == 0) & (ys != p))
    by_q = ((xs % q == 0) & (xs != q)) | ((ys % q == 0) & (ys != q))
    return int(np.count_nonzero(by_p & by_q))


def only_by_count(n: int, p: int) -> int:
    """Non-prime pairs whose smallest odd witness prime is exactly p."""
    _check_even_n(n)
    table = shared_sieve(max(n, p))
    _check_odd_prime(p, table)
    return int(np.count_nonzero(_witnesses(n, table) == p))


def breakdown(n: int) -> Breakdown:
    """Per-prime breakdown of all non-prime pairs of n.

    For n < 10 the universe has no composite coordinate, so the rows are
    empty and the total is zero.
    """
    _check_even_n(n)
    if n < 10:
        return Breakdown(n, (), 0)
    bound = sieve_bound(n)
    table = shared_sieve(n)
    witnesses = _witnesses(n, table)
    counts = np.bincount(witnesses[witnesses <= bound], minlength=bound + 1)
    rows = tuple((p, int(counts[p])) for p in table.odd_primes_upto(bound))
    return Breakdown(n, rows, int(counts.sum()))
