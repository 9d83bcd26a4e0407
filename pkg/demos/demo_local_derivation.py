"""Reconstructing a local derivation from single-element witnesses.

A local derivation hands out one witness per ELEMENT: query(x) returns
the mapped value and some a with [a, x] = value. The witness is only
determined up to the centralizer of x, so witnesses for different
elements disagree wherever the centralizer lets them. The reconstruction
takes the diagonal of d from the staircase witness and row i from the
witness of I*e_{i,i}; cross-witness identities then certify that these
reads cohere. The same identities catch tampering: corrupt one witness
corner and the failing checks name the indices involved.
"""

import random

from skewlie import (
    bracket,
    build_d,
    canonical_basis,
    ie_diag,
    is_central,
    make_gauged_local_map,
    random_skew,
    s_elem,
    verify_spanning_set,
)
from skewlie.localder import (
    TamperedLocalOracle,
    WitnessedLocalMap,
    check_eq_5_1,
)

N = 4


def main():
    rng = random.Random(23)
    a0 = random_skew(rng, N)
    lmap = make_gauged_local_map(a0, seed=23, gauge="central")

    d = build_d(lmap)
    print("d assembled from %d witnesses" % (N + 1))
    print("  d - a0 is central:", is_central(d - a0))
    mism = [b for b in canonical_basis(N) if bracket(d, b) != lmap.nabla(b)]
    print("  [d, .] matches the map on the whole basis:", not mism)

    rep = verify_spanning_set(lmap, d)
    print("  witness identities:", rep.counts())

    print()
    print("now corrupt the witness of I*e_{2,2} at corner (2,3)")
    tampered = TamperedLocalOracle(lmap.oracle, ie_diag(N, 2), s_elem(N, 2, 3))
    bad_map = WitnessedLocalMap(tampered)
    rows = check_eq_5_1(bad_map)
    print("  row-read consistency:", rows.counts())
    for r in rows.failures():
        print("    FAIL %s" % r.name, "-> pair (%d,%d)" % (r.payload["i"],
                                                           r.payload["k"]))


if __name__ == "__main__":
    main()
