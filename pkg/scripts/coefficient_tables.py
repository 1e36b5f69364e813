#!/usr/bin/env python3
"""Print coefficient tables of the mock Eisenstein family f_{k,j}.

Usage: python3 scripts/coefficient_tables.py [--kmax 5] [--jmax 8] [--order 12]

Each member is printed as an exact series; the shifted integer
coefficients (f + B_j/(2j)) follow on a second line.
"""

import argparse

from mockeis.bernoulli import bernoulli
from mockeis.mock import mock_eisenstein_family


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=5)
    parser.add_argument("--jmax", type=int, default=8)
    parser.add_argument("--order", type=int, default=12)
    parser.add_argument("--route", default="recursionA")
    args = parser.parse_args()

    for k in range(3, args.kmax + 1):
        family = mock_eisenstein_family(k, args.jmax, args.order, args.route)
        print(f"== k = {k} (route {args.route}, order {args.order}) ==")
        for j in range(2, args.jmax + 1, 2):
            member = family.member(j)
            shifted = member + bernoulli(j) / (2 * j)
            ints = [c.numerator for c in shifted.coeffs]
            print(f"f_{{{k},{j}}} = {member}")
            print(f"          shifted integers: {ints}")
        print()


if __name__ == "__main__":
    main()
