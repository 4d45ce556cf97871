"""Count prime pairs at a fixed gap and compare with the pair estimate.

Pairing each odd x with x + 2 and striking every pair with a composite
member leaves the twin primes, so the survival estimate built for partition
counting applies to pi2 as well.  Larger even gaps work the same way.
"""

from goldbach_lab import polignac_count, twin_scan


def main():
    print("gap-2 (twin) counts vs estimate:")
    print(f"{'n':>7} {'pi2':>6} {'estimate':>10} {'ratio':>7}")
    for record in twin_scan(10_000):
        if record.n % 2000 == 0:
            ratio = record.pi2 / record.estimate
            print(f"{record.n:>7} {record.pi2:>6} {record.estimate:>10.3f} {ratio:>7.3f}")

    print("\ncounts at other even gaps, up to 1000:")
    for gap in (2, 4, 6, 10, 30):
        print(f"  gap {gap:>2}: {polignac_count(1000, gap)} pairs")


if __name__ == "__main__":
    main()
