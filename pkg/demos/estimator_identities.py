"""Show the exact-rational structure behind the pair estimate.

The removal series adds (1/p) of whatever survived the smaller odd primes;
its complement telescopes to a plain product.  Both facts are exact, so the
script prints fractions, not floats: the recurrence residual is the zero
fraction at every prime, and the growth delta is a positive fraction.
"""

from goldbach_lab import (
    estimate_prime_pairs,
    growth_delta,
    next_prime_above,
    recurrence_residual,
    removal_fraction,
    survival_fraction,
)


def main():
    print("p    removal      survival = product of (q-2)/q")
    p = 3
    while p <= 31:
        print(f"{p:<5}{str(removal_fraction(p)):<13}{survival_fraction(p)}")
        p = next_prime_above(p)

    print("\nrecurrence residual survival(p) - (p-2)/p * survival(l(p)):")
    for p in (5, 11, 101, 9973):
        print(f"  p={p:<6} residual = {recurrence_residual(p)}")

    print("\ngrowth delta between consecutive prime-square scales:")
    for p in (3, 5, 7, 11, 13):
        print(f"  p={p:<4} delta = {growth_delta(p)}")

    print("\nestimates against the oracle:")
    for n in (10, 100, 998, 9998):
        record = estimate_prime_pairs(n, with_actual=True)
        print(
            f"  n={n:<6} bound={record.bound:<4} survival={record.survival} "
            f"estimate={record.estimate:.6f} actual={record.actual_ordered}"
        )


if __name__ == "__main__":
    main()
