"""Walk the metric family along a radius and watch the asymmetry grow.

Prints, for a few interpolation values `a`, the forward and backward cost
of a unit radial step, the volume density against Lebesgue measure, and
the two one-way distances between the origin and the point.  At a = 1 the
forward distance to the boundary stays finite while the backward one blows
up, which is the whole point of the family.

Run:  python3 demos/metric_playground.py
"""

import numpy as np

from funkball import (
    BallPoint,
    ModelParams,
    funk_distance,
    randers_F,
    reversibility,
    volume_density,
)

RADII = (0.1, 0.3, 0.5, 0.7, 0.9)


def sweep(a):
    params = ModelParams(n=2, a=a)
    rF = reversibility(params)
    print(f"\n=== a = {a}  (reversibility {rF}) ===")
    print(f"{'r':>5} {'F(out)':>10} {'F(in)':>10} {'density':>10} {'d(0,x)':>9} {'d(x,0)':>9}")
    origin = BallPoint(np.zeros(2))
    for r in RADII:
        x = np.array([r, 0.0])
        p = BallPoint(x)
        out = randers_F(params, p, np.array([1.0, 0.0]))
        inward = randers_F(params, p, np.array([-1.0, 0.0]))
        dens = volume_density(params, p)
        if a == 1.0:
            fwd = funk_distance(origin, p)
            bwd = funk_distance(p, origin)
            print(f"{r:5.2f} {out:10.4f} {inward:10.4f} {dens:10.4f} {fwd:9.4f} {bwd:9.4f}")
        else:
            print(f"{r:5.2f} {out:10.4f} {inward:10.4f} {dens:10.4f} {'-':>9} {'-':>9}")


def main():
    for a in (0.0, 0.5, 1.0):
        sweep(a)
    print("\nNote how F(out)/F(in) approaches (1+r)/(1-r) as a -> 1, while")
    print("the a = 1 volume density is exactly 1: the boundary singularity of")
    print("the Klein measure is cancelled by the Randers correction.")


if __name__ == "__main__":
    main()
