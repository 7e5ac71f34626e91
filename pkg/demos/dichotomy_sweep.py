"""Numerical witness that the a = 1 Sobolev class is not a vector space.

The profile u(r) = -sqrt(1 - r) has a finite weighted gradient energy C1,
but its negation -u has energy C2 that diverges logarithmically as the
truncation radius approaches the boundary.  This script tabulates both
along a schedule of truncations and fits the divergence slope; compare
with the expected per-decade gain n * omega_n * ln(10).

Run:  python3 demos/dichotomy_sweep.py
"""

import math

from funkball import divergence_trend, sphere_area


def main(n=2):
    trend = divergence_trend(n)
    print(f"dimension n = {n}")
    print(f"{'R':>14} {'C1(R)':>12} {'C2(R)':>12}")
    for R, c1, c2 in zip(trend["R"], trend["C1"], trend["C2"]):
        print(f"{R:14.10f} {c1:12.8f} {c2:12.4f}")
    per_decade = sphere_area(n) * math.log(10.0)
    print(f"\nC1 limit      : {trend['c1_limit']:.10f}  (rel err {trend['c1_rel_error']:.2e})")
    print(f"fitted C2 slope: {trend['slope']:.6f} per unit of ln(1/(1-R))")
    print(f"expected slope : {trend['slope_expected']:.6f}  ({per_decade:.4f} per decade)")
    print("\nC1 settles while C2 runs off to infinity: u lies in the space,")
    print("-u does not, so the class is a cone rather than a vector space.")


if __name__ == "__main__":
    main()
