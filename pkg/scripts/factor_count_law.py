"""Tabulate the smallest factor count of Phi_c monomials containing phi_n."""

import argparse
import time

from mbdef.critical import first_appearance, universal_critical


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=6)
    a = p.parse_args()
    cutoff = 2 * (a.max_n + 1)
    start = time.perf_counter()
    fa = first_appearance(universal_critical(a.max_n, cutoff).phi_c, a.max_n)
    print(f"cutoff {cutoff}, {time.perf_counter() - start:.2f}s")
    print("n  first  n+1")
    for n, k in fa.items():
        print(f"{n:<2d} {k!s:<6} {n + 1}")


if __name__ == "__main__":
    main()
