"""Compare pair richness across factor-shape families.

Even numbers 2p (prime doubled) carry the fewest prime pairs; adding small
prime factors (6p, 10p, 30p) makes coordinate multiples overlap and leaves
more pairs prime.  The script scans all four families, prints dyadic-bucket
means, and writes the full records to family_scan.csv for plotting.
"""

from collections import defaultdict
from fractions import Fraction

from goldbach_lab import emit, family_scan

N_MAX = 50_000
LABELS = ("2p", "6p", "10p", "30p")


def main():
    records = family_scan(LABELS, N_MAX)
    by_family = defaultdict(list)
    for r in records:
        by_family[r.family].append(r)

    print(f"{'bucket':<18}" + "".join(f"{label:>10}" for label in LABELS))
    k = 10
    while 2 ** (k + 1) <= N_MAX:
        lo, hi = 2**k, 2 ** (k + 1)
        cells = []
        for label in LABELS:
            values = [r.unordered for r in by_family[label] if lo <= r.n < hi]
            mean = Fraction(sum(values), len(values))
            cells.append(f"{float(mean):>10.2f}")
        print(f"[{lo},{hi}):".ljust(18) + "".join(cells))
        k += 1

    emit(records, fmt="csv", out="family_scan.csv")
    print(f"\nwrote {len(records)} records to family_scan.csv")


if __name__ == "__main__":
    main()
