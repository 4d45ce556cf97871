"""Independent brute-force oracles for the test suite.

Everything here is trial division and literal enumeration, sharing no code
with the package, so these stay valid referees for the fast paths.
"""

import math
from fractions import Fraction


def is_prime(m):
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def smallest_prime_factor(m):
    for f in range(2, m + 1):
        if m % f == 0:
            return f
    raise ValueError(m)


def odd_primes_upto(x):
    return [p for p in range(3, x + 1) if is_prime(p)]


def largest_prime_below(x):
    t = math.ceil(x) - 1
    while t >= 2:
        if is_prime(t):
            return t
        t -= 1
    raise ValueError(f"no prime below {x}")


def next_prime_above(x):
    t = math.floor(x) + 1
    while not is_prime(t):
        t += 1
    return t


def universe(n):
    return range(3, n - 2, 2)


def smallest_witness(n, x):
    """Smallest odd prime dividing a composite coordinate; None for prime pairs."""
    best = None
    for coord in (x, n - x):
        if is_prime(coord):
            continue
        f = 3
        while coord % f != 0:
            f += 2
        best = f if best is None else min(best, f)
    return best


def ordered_count(n):
    return sum(1 for x in universe(n) if is_prime(x) and is_prime(n - x))


def unordered_count(n):
    return sum(
        1 for x in universe(n) if x <= n - x and is_prime(x) and is_prime(n - x)
    )


def divisible_count(n, p):
    count = 0
    for x in universe(n):
        y = n - x
        if (x % p == 0 and x != p) or (y % p == 0 and y != p):
            count += 1
    return count


def only_by_count(n, p):
    return sum(1 for x in universe(n) if smallest_witness(n, x) == p)


def breakdown_rows(n, bound):
    return [(p, only_by_count(n, p)) for p in odd_primes_upto(bound)]


def removal_fraction(x):
    """Literal translation of the removal series, via trial-division primes."""
    w = Fraction(0)
    product = Fraction(1)
    for p in odd_primes_upto(math.floor(x)):
        w += Fraction(1, p) * product
        product *= Fraction(p - 2, p)
    return w


def survival_product(p):
    """The telescoped form: product of (q - 2)/q over odd primes q <= p."""
    product = Fraction(1)
    for q in odd_primes_upto(p):
        product *= Fraction(q - 2, q)
    return product


def gap_pair_count(n, d):
    return sum(1 for x in range(2, n - d + 1) if is_prime(x) and is_prime(x + d))
