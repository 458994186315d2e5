#!/usr/bin/env python3
"""How fast the finite-support bound approaches its infinite-precision limit.

For a fixed concentration parameter the discrete kernel and the Nystrom
discretization solve the same operator two different ways; the table shows
their difference shrinking as the support grows.
"""

import argparse

from phasebound import compare_discrete_to_asymptotic


def run(xi: float, dks: list[int]) -> None:
    print(f"xi = {xi}")
    print(f"{'dk':>6}  {'dalpha':>12}  {'lambda0':>20}  {'asymptote':>20}  {'difference':>12}")
    for dk in dks:
        rep = compare_discrete_to_asymptotic(xi, dk)
        print(
            f"{dk:>6}  {rep.delta_alpha:>12.6f}  {rep.lambda0_discrete:>20.15f}  "
            f"{rep.lambda0_asymptotic:>20.15f}  {rep.difference:>12.3e}"
        )


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--xi", type=float, default=1.0)
    parser.add_argument(
        "--dk", type=int, nargs="+", default=[5, 10, 20, 50, 100, 200, 400]
    )
    args = parser.parse_args()
    run(args.xi, args.dk)
