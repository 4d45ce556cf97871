"""Walk the exact pair-counting oracles on small even numbers.

For each even n the universe holds (n/2) - 2 ordered odd pairs (x, n - x).
This script lists the prime pairs for n = 6..24, then prints the full
witness-prime breakdown of n = 998 next to the closed-form column, ending
with the bookkeeping identity: universe = prime pairs + non-prime pairs.
"""

from goldbach_lab import (
    breakdown_report,
    prime_pair_count,
    prime_pair_list,
    total_odd_pairs,
)


def main():
    print("n   pairs  prime  listing")
    for n in range(6, 26, 2):
        listing = ", ".join(f"({x},{y})" for x, y in prime_pair_list(n))
        print(f"{n:<4}{total_odd_pairs(n):<7}{prime_pair_count(n):<7}{listing}")

    n = 998
    report = breakdown_report(n)
    print(f"\nwitness breakdown for n = {n}")
    print(f"{'p':>4} {'formula':>8} {'divisible':>10} {'only by p':>10}")
    for p, formula, divisible, only_by in report.rows:
        print(f"{p:>4} {formula:>8} {divisible:>10} {only_by:>10}")
    print(f"{'total':>24} {report.total:>10}")

    prime_pairs = prime_pair_count(n)
    print(f"\n{total_odd_pairs(n)} pairs = {prime_pairs} prime pairs + {report.total} non-prime pairs")


if __name__ == "__main__":
    main()
