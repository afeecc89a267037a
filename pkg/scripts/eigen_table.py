#!/usr/bin/env python3
"""Print the Omega_1/3/5 spectrum on Q_lambda for all strict partitions."""

import argparse

from schurq.algebra import format_fraction
from schurq.qfunctions import strict_partitions
from schurq.spectra import eigen_check, hc_eigenvalue_omega3


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--max", type=int, default=8, help="maximum weight")
    args = parser.parse_args()

    header = f"{'lambda':>10} {'omega1':>8} {'omega3':>8} {'omega5':>10} {'formula3':>10}"
    print(header)
    print("-" * len(header))
    for d in range(1, args.max + 1):
        for lam in strict_partitions(d, max_length=args.n):
            evs = {}
            for op in ("omega1", "omega3", "omega5"):
                rep = eigen_check(lam, op, args.n)
                evs[op] = format_fraction(rep.eigenvalue) if rep.is_eigen else "NOT EIGEN"
            print(
                f"{str(lam):>10} {evs['omega1']:>8} {evs['omega3']:>8} "
                f"{evs['omega5']:>10} {format_fraction(hc_eigenvalue_omega3(lam)):>10}"
            )


if __name__ == "__main__":
    main()
