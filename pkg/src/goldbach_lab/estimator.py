"""Survival-product estimator for prime-pair counts, in exact rationals.

Each odd prime q removes roughly 2/q of the surviving pair universe (one
share per coordinate).  Accumulating the removals gives

    removal_fraction(x) = sum over odd primes p <= x of
                          (1/p) * prod over odd primes q < p of (q - 2)/q

and the survivors satisfy the telescoping identity

    survival_fraction(p) = 1 - 2 * removal_fraction(p)
                         = prod over odd primes q <= p of (q - 2)/q.

``estimate_prime_pairs`` applies the survival fraction at the witness bound
l(sqrt(n)) to the universe size P = (n/2) - 2.  All arithmetic is exact
(`fractions.Fraction`); floats appear only when a caller asks for them, so
identity checks stay identities instead of tolerance tests.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .pairs import ORDERED, prime_pair_count
from .sieve import is_prime, largest_prime_below, next_prime_above, shared_sieve, sieve_bound

# Incremental chain over odd primes: W values, survival values, and the
# running product feeding the next term.  Append-only under the lock.
_chain_lock = threading.Lock()
_chain_primes: list[int] = []
_chain_w: list[Fraction] = []
_chain_survival: list[Fraction] = []
_chain_product = Fraction(1)


@dataclass(frozen=True)
class EstimateRecord:
    """Estimated prime-pair count for one n, with the exact ingredients."""

    n: int
    total_pairs: int
    bound: int
    survival: Fraction
    actual_ordered: int | None = None

    @property
    def estimate_exact(self) -> Fraction:
        return self.total_pairs * self.survival

    @property
    def estimate(self) -> float:
        return float(self.estimate_exact)

    @property
    def signed_error_exact(self) -> Fraction | None:
        """estimate - actual, exact; None when no actual count was attached."""
        if self.actual_ordered is None:
            return None
        return self.estimate_exact - self.actual_ordered


def _extend_chain(limit: int) -> None:
    global _chain_product
    with _chain_lock:
        start = _chain_primes[-1] + 1 if _chain_primes else 3
        if start > limit:
            return
        table = shared_sieve(limit)
        w = _chain_w[-1] if _chain_w else Fraction(0)
        product = _chain_product
        for p in table.odd_primes_upto(limit):
            if p < start:
                continue
            w += Fraction(1, p) * product
            product *= Fraction(p - 2, p)
            _chain_primes.append(p)
            _chain_w.append(w)
            _chain_survival.append(1 - 2 * w)
        _chain_product = product


def _anchor_prime(x) -> int:
    """Largest prime <= x, the point where the chain is evaluated."""
    if x < 3:
        raise ValueError(f"removal fraction defined only for x >= 3, got {x}")
    t = math.floor(x)
    return t if is_prime(t) else largest_prime_below(t)


def _chain_index(x) -> int:
    anchor = _anchor_prime(x)
    if not _chain_primes or _chain_primes[-1] < anchor:
        _extend_chain(anchor)
    return bisect_right(_chain_primes, anchor) - 1


def removal_fraction(x) -> Fraction:
    """Cumulative one-sided removal mass over odd primes up to x.

    Non-prime and fractional x floor to the largest prime <= x.  The first
    term (p = 3) carries an empty product, hence value 1/3 at x = 3.
    """
    return _chain_w[_chain_index(x)]


def survival_fraction(x) -> Fraction:
    """1 - 2 * removal_fraction(x): the surviving share of the universe."""
    return _chain_survival[_chain_index(x)]


def recurrence_residual(p: int) -> Fraction:
    """survival(p) - ((p-2)/p) * survival(previous prime); exactly zero.

    Needs a prior odd prime, so p must be a prime >= 5.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    return survival_fraction(p) - Fraction(p - 2, p) * survival_fraction(largest_prime_below(p))


def growth_delta(p: int) -> Fraction:
    """Estimated prime-pair gain from scale p*p to g(p)*g(p), exact.

    (survival(p)/2) * (g(p)*(g(p) - 2) - p*p) with g the next prime above p.
    Positive for every odd prime, since both factors are.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    g = next_prime_above(p)
    return (survival_fraction(p) / 2) * (g * (g - 2) - p * p)


def estimate_prime_pairs(n: int, with_actual: bool = False) -> EstimateRecord:
    """Survival-product estimate of the ordered prime-pair count of n.

    Defined for even n >= 10 (smaller n have no witness bound).  With
    ``with_actual`` the oracle's ordered count is attached for comparison.
    """
    if n % 2 != 0 or n < 10:
        raise ValueError(f"estimate defined for even n >= 10, got {n}")
    bound = sieve_bound(n)
    actual = prime_pair_count(n, ORDERED) if with_actual else None
    return EstimateRecord(n, n // 2 - 2, bound, survival_fraction(bound), actual)


def estimate_nonprime_pairs(n: int) -> float:
    """Estimated count of non-prime pairs: 2 * P * removal_fraction(bound).

    Complements the prime-pair estimate exactly: the two add up to P.
    """
    if n % 2 != 0 or n < 10:
        raise ValueError(f"estimate defined for even n >= 10, got {n}")
    total = n // 2 - 2
    return float(2 * total * removal_fraction(sieve_bound(n)))
