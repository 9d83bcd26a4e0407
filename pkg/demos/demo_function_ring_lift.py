"""Local derivations over function rings, assembled pointwise.

Over a ring of functions on a finite domain, a matrix is a matrix of
functions, or equivalently one Gaussian matrix per point. This script
builds an independent local derivation at each point, lifts the family
to one local derivation over the function ring, reconstructs a single
function-valued implementer, and checks that evaluating it at a point
agrees with what the per-point reconstruction would have produced.
"""

import random

from skewlie import (
    FunctionRing,
    at_point,
    bracket,
    build_d,
    is_central,
    make_gauged_local_map,
    pointwise_lift,
    random_skew,
)

N = 3
OMEGA = 3


def main():
    rng = random.Random(5)
    point_maps = [make_gauged_local_map(random_skew(rng, N), seed=50 + t)
                  for t in range(OMEGA)]
    lifted = pointwise_lift(point_maps)
    print("lifted %d point maps into one over %s" % (OMEGA, lifted.ring.name))

    d = build_d(lifted)
    ring = FunctionRing(OMEGA)
    ok = True
    for _ in range(20):
        x = random_skew(rng, N, ring)
        ok = ok and lifted.nabla(x) == bracket(d, x)
    print("function-valued d implements the lifted map on 20 random "
          "elements:", ok)

    for t in range(OMEGA):
        diff = at_point(d, t) - build_d(point_maps[t])
        print("  point %d: projected d matches the per-point build up to "
              "center: %s" % (t, is_central(diff)))


if __name__ == "__main__":
    main()
