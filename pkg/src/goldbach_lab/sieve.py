"""Smallest-prime-factor sieving and prime neighbor queries.

A :class:`SieveTable` stores, for every integer m in [2, limit], the smallest
prime factor of m.  Every divisibility and primality question asked elsewhere
in the package reduces to one table lookup.  A completed table is immutable,
so it can be shared freely across threads.

Module-level helpers (``is_prime``, ``largest_prime_below``,
``next_prime_above``, ``sieve_bound``) operate on a process-wide shared table
that grows deterministically by doubling whenever a query needs more
coverage.
"""

from __future__ import annotations

import math
import threading

import numpy as np


class SieveCoverageError(Exception):
    """A query exceeded the table limit; the caller must extend the sieve."""


def _smallest_factor_table(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int32 if limit < 2**31 else np.int64)
    if limit >= 2:
        spf[2] = 2
    if limit >= 4:
        spf[4::2] = 2
    for p in range(3, math.isqrt(limit) + 1, 2):
        if spf[p] == 0:
            # odd multiples only; even ones already carry factor 2.
            # multiples below p*p have a smaller factor and are marked.
            view = spf[p * p :: 2 * p]
            view[view == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = unmarked  # survivors are prime
    spf[:2] = 0
    return spf


class SieveTable:
    """Smallest-prime-factor table covering [2, limit], built eagerly."""

    __slots__ = ("limit", "spf", "_flags", "_primes")

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError(f"sieve limit must be at least 2, got {limit}")
        self.limit = int(limit)
        self.spf = _smallest_factor_table(self.limit)
        self.spf.flags.writeable = False
        self._flags = None
        self._primes = None

    def _check(self, m: int) -> None:
        if m > self.limit:
            raise SieveCoverageError(
                f"{m} exceeds sieve limit {self.limit}; extend the sieve"
            )

    def smallest_prime_factor(self, m: int) -> int:
        """Smallest prime factor of m, for 2 <= m <= limit."""
        if m < 2:
            raise ValueError(f"smallest prime factor undefined for {m}")
        self._check(m)
        return int(self.spf[m])

    def is_prime(self, m: int) -> bool:
        """True iff m is prime.  m must be covered by the table."""
        if m < 2:
            return False
        self._check(m)
        return int(self.spf[m]) == m

    @property
    def prime_flags(self) -> np.ndarray:
        """Boolean array f with f[m] true iff m is prime (read-only)."""
        if self._flags is None:
            flags = self.spf == np.arange(self.limit + 1, dtype=self.spf.dtype)
            flags[:2] = False
            flags.flags.writeable = False
            self._flags = flags
        return self._flags

    @property
    def primes(self) -> np.ndarray:
        """Ascending array of all primes <= limit (read-only)."""
        if self._primes is None:
            primes = np.flatnonzero(self.prime_flags)
            primes.flags.writeable = False
            self._primes = primes
        return self._primes

    def odd_primes_upto(self, x: int) -> list[int]:
        """Odd primes p with 3 <= p <= x, ascending."""
        self._check(max(x, 2))
        primes = self.primes
        hi = int(np.searchsorted(primes, x, side="right"))
        return [int(p) for p in primes[1:hi]]


def build_sieve(limit: int) -> SieveTable:
    """Build a fresh table covering [2, limit]."""
    return SieveTable(limit)


_DEFAULT_LIMIT = 1 << 16
_shared: SieveTable | None = None
_shared_lock = threading.Lock()


def shared_sieve(min_limit: int = 2) -> SieveTable:
    """Process-wide table with limit >= min_limit.

    Grows by doubling from a fixed base, so the sequence of limits (and hence
    every answer derived from the table) is deterministic.  The returned
    table is immutable; later growth installs a new table without touching
    tables already handed out.
    """
    global _shared
    table = _shared
    if table is not None and table.limit >= min_limit:
        return table
    with _shared_lock:
        table = _shared
        if table is None or table.limit < min_limit:
            new_limit = _DEFAULT_LIMIT if table is None else table.limit
            while new_limit < min_limit:
                new_limit *= 2
            table = SieveTable(new_limit)
            _shared = table
    return table


def is_prime(m: int, table: SieveTable | None = None) -> bool:
    """Primality by table lookup.

    With an explicit ``table`` the query is strict: values beyond its limit
    raise :class:`SieveCoverageError`.  Without one, the shared table is
    extended as needed.
    """
    if table is not None:
        return table.is_prime(m)
    if m < 2:
        return False
    return shared_sieve(m).is_prime(m)


def largest_prime_below(x) -> int:
    """Largest prime strictly less than x (x may be fractional).

    Raises ValueError when x <= 2, since no smaller prime exists.
    """
    if x <= 2:
        raise ValueError(f"no prime below {x}")
    t = math.ceil(x) - 1  # largest integer strictly below x
    table = shared_sieve(max(t, 2))
    primes = table.primes
    i = int(np.searchsorted(primes, t, side="right")) - 1
    return int(primes[i])


def next_prime_above(x) -> int:
    """Smallest prime strictly greater than x (x may be fractional)."""
    t = max(math.floor(x) + 1, 2)  # smallest candidate
    table = shared_sieve(t)
    while True:
        primes = table.primes
        i = int(np.searchsorted(primes, t, side="left"))
        if i < len(primes):
            return int(primes[i])
        # no prime in [t, limit]; Bertrand guarantees one below 2t
        table = shared_sieve(table.limit * 2)


def sieve_bound(n: int) -> int:
    """Largest prime p with p*p < n, via integer square root only.

    This is the largest prime whose multiples can witness a composite
    coordinate among the odd pairs summing to n.  Perfect squares resolve
    by strictness: sieve_bound(121) is 7, not 11.  Below n = 10 no odd
    prime qualifies.
    """
    if n < 10:
        raise ValueError(f"no odd prime p with p*p < {n}; need n >= 10")
    t = math.isqrt(n - 1)  # largest integer t with t*t < n
    return largest_prime_below(t + 1)
