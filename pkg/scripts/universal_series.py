"""Print the universal critical point and critical value for N coefficients."""

import argparse

from mbdef.critical import first_appearance, universal_critical


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--cutoff", type=int, default=8)
    a = p.parse_args()
    d = universal_critical(a.n, a.cutoff)
    print(f"t_c   = {d.t_c['t']}")
    print(f"Phi_c = {d.phi_c}")
    print(f"residual zero: {d.residual_zero}, iterations: {d.iterations}")
    print(f"first appearance by factor count: {first_appearance(d.phi_c, a.n)}")


if __name__ == "__main__":
    main()
