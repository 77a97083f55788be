"""Compare the truncated universal Phi_c at rational phi values with the exact root.

Prints the discrepancy, the next-weight tail and the error relative to the
leading term for a range of cutoffs.
"""

import argparse
import json
from fractions import Fraction

from mbdef.critical import universal_critical
from mbdef.oracle import numeric_cross_check


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--phi", nargs=3, default=["1/100", "1/50", "3/100"])
    p.add_argument("--cutoffs", nargs="+", type=int, default=[4, 6, 8, 10, 12, 14])
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    vals = {f"phi{k}": Fraction(v) for k, v in enumerate(a.phi, 1)}
    rows = []
    for c in a.cutoffs:
        r = numeric_cross_check(universal_critical(3, c).phi_c, vals, c)
        rows.append({"cutoff": c, **r.to_json()})
    if a.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'cutoff':>6} {'discrepancy':>12} {'tail':>12} {'relative':>12} within_tail")
    for r in rows:
        print(f"{r['cutoff']:>6} {r['discrepancy']:>12.3e} {r['weight_tail']:>12.3e} "
              f"{r['relative_to_leading']:>12.3e} {r['within_tail']}")


if __name__ == "__main__":
    main()
