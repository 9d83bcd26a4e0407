"""Reconstruction of two-local derivations from pair witnesses.

A two-local derivation hands out, for every pair of elements x, y, some
inner derivation that matches it on both: a witness a with mapped values
[a, x] and [a, y]. Different pairs may receive different witnesses, and
each witness is only determined up to a central summand. The functions
here rebuild one global implementer from finitely many pair queries:

  * off-diagonal entry (i, j): the witness for (s_{i,p}, s_{p,j}) has the
    right (i, j) and (j, i) corners for any third index p
  * diagonal: the witness for (s_{i_o,j_o}, staircase) has the right
    diagonal up to one common central shift, which brackets ignore

so n >= 3 is required, and the result implements the map exactly on all
of K_n even though only O(n^2) pairs were ever queried.
"""

from __future__ import annotations

import random
from hashlib import sha256

from .errors import (
    EqualIndices,
    Infeasible,
    NeedThreeIndices,
    NotSkewAdjoint,
    UnsupportedRing,
)
from .lie import (
    basis_labels,
    bracket,
    canonical_basis,
    centralizer_gauge,
    decompose,
    ie_diag,
    random_skew,
    recompose,
    s_elem,
    staircase,
)
from .linsolve import ReducedSystem
from .matrices import at_point, corner, require_skew_adjoint, zeros
from .reporting import VerificationReport
from .rings import GAUSS, FunctionElement, FunctionRing


def pair_key(x, y):
    """Order-free identity of a query pair."""
    return tuple(sorted((x.cache_key(), y.cache_key())))


class GaugedInnerTwoLocal:
    """A two-local derivation built from one inner derivation.

    Every query answers with a0 plus a central summand lam * I * identity
    whose scale is derived from the queried pair (and, over a function
    ring, varies from point to point). The mapped values are those of
    [a0, .]; the gauges exercise exactly the freedom reconstruction has
    to cope with.
    """

    def __init__(self, a0, seed=0, gauge="central"):
        self.a0 = require_skew_adjoint(a0, "two-local seed")
        self.ring = a0.ring
        self.n = a0.n
        self.seed = seed
        if gauge not in ("central", "none"):
            raise ValueError("gauge must be 'central' or 'none', got %r" % gauge)
        self.gauge = gauge
        self._witnesses = {}

    def _scale(self, key):
        def draw(t):
            msg = "%d|%s|%s|%d" % (self.seed, key[0], key[1], t)
            h = sha256(msg.encode()).digest()
            return int.from_bytes(h[:4], "big") % 19 - 9
        if isinstance(self.ring, FunctionRing):
            return FunctionElement(GAUSS.scalar(draw(t))
                                   for t in range(self.ring.npoints))
        return self.ring.scalar(draw(0))

    def query(self, x, y):
        require_skew_adjoint(x, "first query argument")
        require_skew_adjoint(y, "second query argument")
        if self.gauge == "none":
            return self.a0
        key = pair_key(x, y)
        w = self._witnesses.get(key)
        if w is None:
            w = self.a0 + centralizer_gauge(self._scale(key), self.n,
                                            self.ring)
            self._witnesses[key] = w
        return w


class TamperedPairOracle:
    """Wrapper that corrupts the witness of one chosen pair.

    The perturbation is added after the base oracle answers, so the
    damaged witness is still skew-adjoint but no longer implements the
    map on its pair. Used to exercise failure detection.
    """

    def __init__(self, base, x, y, perturbation):
        self.base = base
        self.ring = base.ring
        self.n = base.n
        self._key = pair_key(x, y)
        self.perturbation = require_skew_adjoint(perturbation, "perturbation")

    def query(self, x, y):
        w = self.base.query(x, y)
        if pair_key(x, y) == self._key:
            return w + self.perturbation
        return w


def delta_eval(oracle, z):
    """The mapped value at z, read off the witness for the pair (z, z)."""
    require_skew_adjoint(z, "argument")
    return bracket(oracle.query(z, z), z)


def default_p(n, i, j):
    for p in range(1, n + 1):
        if p != i and p != j:
            return p
    raise NeedThreeIndices("no third index available below %d" % (n + 1))


def extract_offdiagonal(oracle, i, j, p=None):
    """The (i, j) and (j, i) corners of any implementer, as one matrix.

    Reads them off the witness for the pair (s_{i,p}, s_{p,j}); any
    third index p gives the same answer.
    """
    n = oracle.n
    if n < 3:
        raise NeedThreeIndices("corner extraction needs size at least 3")
    if i == j:
        raise EqualIndices("off-diagonal extraction needs i != j")
    if p is None:
        p = default_p(n, i, j)
    if p in (i, j):
        raise EqualIndices("third index %d collides with (%d, %d)" % (p, i, j))
    ring = oracle.ring
    a = oracle.query(s_elem(n, i, p, ring), s_elem(n, p, j, ring))
    return corner(a, i, j) + corner(a, j, i)


def extract_diagonal(oracle, i_o=1, j_o=2, weights=None):
    """The diagonal of an implementer, up to one central shift.

    Reads it off the witness for the pair (s_{i_o,j_o}, staircase).
    """
    n = oracle.n
    if n < 3:
        raise NeedThreeIndices("diagonal extraction needs size at least 3")
    if i_o == j_o:
        raise EqualIndices("observation indices must differ")
    ring = oracle.ring
    c = oracle.query(s_elem(n, i_o, j_o, ring), staircase(n, weights, ring))
    out = zeros(n, ring)
    for i in range(1, n + 1):
        out = out + corner(c, i, i)
    return out


def reconstruct_implementer(oracle, i_o=1, j_o=2, p_choice=None, weights=None):
    """Assemble one skew-adjoint matrix implementing the whole map.

    p_choice may map an ordered pair (i, j) to the third index used for
    that corner; by default the smallest available index is used. The
    result can differ from any given implementer by a central summand
    only, which no bracket sees.
    """
    n = oracle.n
    if n < 3:
        raise NeedThreeIndices("reconstruction needs size at least 3")
    abar = extract_diagonal(oracle, i_o, j_o, weights)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = p_choice(i, j) if p_choice else None
            abar = abar + extract_offdiagonal(oracle, i, j, p)
    return require_skew_adjoint(abar, "reconstructed implementer")


def verify_implementer(oracle, abar, elements):
    """Check mapped value == [abar, .] on labeled elements.

    Returns the list of labels where the two sides differ.
    """
    bad = []
    for label, z in elements:
        if delta_eval(oracle, z) != bracket(abar, z):
            bad.append(label)
    return bad


def check_pair_lemmas(oracle, weights=None):
    """Consistency of the extraction readings across all free choices.

    For every ordered pair (i, j) the corner read through each admissible
    third index p must agree, and for every observation pair (i_o, j_o)
    the diagonal read off its staircase witness must have the same
    successive differences. Disagreements are recorded with the indices
    that exposed them; a tampered witness shows up here.
    """
    n = oracle.n
    if n < 3:
        raise NeedThreeIndices("consistency sweep needs size at least 3")
    rep = VerificationReport("pair witness consistency",
                             config={"n": n, "ring": oracle.ring.name})
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            readings = []
            for p in range(1, n + 1):
                if p in (i, j):
                    continue
                readings.append((p, extract_offdiagonal(oracle, i, j, p)))
            base_p, base = readings[0]
            mismatches = [p for p, r in readings[1:] if r != base]
            rep.add("corner sweep (%d,%d)" % (i, j), not mismatches,
                    anchor="lemma 3.41", i=i, j=j,
                    p_values=[p for p, _ in readings],
                    disagreeing_p=mismatches)
    ref = None
    for i_o in range(1, n + 1):
        for j_o in range(1, n + 1):
            if i_o == j_o:
                continue
            diag = extract_diagonal(oracle, i_o, j_o, weights)
            diffs = tuple(diag.entry(t, t) - diag.entry(t + 1, t + 1)
                          for t in range(1, n))
            if ref is None:
                ref = diffs
                rep.add("diagonal reference (%d,%d)" % (i_o, j_o), True,
                        anchor="lemma 3.6", i_o=i_o, j_o=j_o)
                continue
            bad = [t + 1 for t, (u, v) in enumerate(zip(diffs, ref)) if u != v]
            rep.add("diagonal sweep (%d,%d)" % (i_o, j_o), not bad,
                    anchor="lemma 3.6", i_o=i_o, j_o=j_o,
                    disagreeing_steps=bad)
    return rep


class PreparedBracketSolver:
    """Bracket equations against a fixed probe set, row-reduced once.

    The unknown is the coefficient vector of an implementer over the
    canonical basis; probing with the staircase steps and I*e_{1,1}
    already pins it down to the central line. The reduction is computed
    over the Gaussian rationals and reused for every ring, since the
    structure constants do not depend on the ring.
    """

    _cache = {}

    def __init__(self, n):
        self.n = n
        basis = canonical_basis(n)
        self.probe_specs = [("s", k, k + 1) for k in range(1, n)] + [("Idiag", 1, 1)]
        rows = []
        for spec in self.probe_specs:
            probe = self._probe(spec, GAUSS)
            cols = [decompose(bracket(b, probe)) for b in basis]
            for m in range(n * n):
                rows.append({k: cols[k][m] for k in range(n * n)
                             if cols[k][m]})
        self.system = ReducedSystem(rows, n * n)
        if self.system.rank != n * n - 1:
            raise AssertionError("probe system rank %d, expected %d"
                                 % (self.system.rank, n * n - 1))

    def _probe(self, spec, ring):
        kind, i, j = spec
        n = self.n
        return s_elem(n, i, j, ring) if kind == "s" else ie_diag(n, i, ring)

    @classmethod
    def for_size(cls, n):
        solver = cls._cache.get(n)
        if solver is None:
            solver = cls(n)
            cls._cache[n] = solver
        return solver

    def solve_values(self, nabla, ring):
        """One matrix c with [c, .] == nabla on K_n, or Infeasible.

        The candidate solves the probe equations exactly; it is then
        checked against the mapped values on the whole canonical basis,
        which is conclusive because any solution of the full system also
        solves the probes and the probe kernel is central.
        """
        rhs = []
        for spec in self.probe_specs:
            rhs.extend(decompose(nabla(self._probe(spec, ring))))
        coeffs = self.system.solve(rhs, ring=ring)
        cand = recompose(coeffs, self.n, ring)
        for label, b in zip(basis_labels(self.n), canonical_basis(self.n, ring)):
            if bracket(cand, b) != nabla(b):
                raise Infeasible("no inner derivation matches the map at %s"
                                 % label)
        return cand

    def solve(self, oracle):
        """One implementer of the oracle's map, or Infeasible."""
        return self.solve_values(lambda z: delta_eval(oracle, z), oracle.ring)


def brute_force_implementer(oracle):
    """Solve for an implementer directly from bracket equations."""
    return PreparedBracketSolver.for_size(oracle.n).solve(oracle)


class PointProjectedOracle:
    """A function-ring oracle observed at one point of its domain."""

    def __init__(self, base, point):
        if not isinstance(base.ring, FunctionRing):
            raise UnsupportedRing("projection needs a function ring oracle")
        self.base = base
        self.point = point
        self.ring = GAUSS
        self.n = base.n
        self._lift_ring = base.ring

    def _lift(self, x):
        from .matrices import Matrix
        r = self._lift_ring
        return Matrix(r, ((r.scalar(v) for v in row) for row in x.rows))

    def query(self, x, y):
        w = self.base.query(self._lift(x), self._lift(y))
        return at_point(w, self.point)


def omega_instantiate(oracle, point):
    """The two-local derivation seen at one point of the function domain."""
    return PointProjectedOracle(oracle, point)


def twolocal_campaign(ring, n, trials, seed, gauge="central", p_sweep=False,
                      random_checks=50, brute_check=True):
    """Seeded end-to-end reconstruction runs, one record per trial.

    Each trial draws a fresh inner seed a0, wraps it in pair gauges,
    reconstructs an implementer from witness corners, and verifies the
    mapped values against [abar, .] on the full canonical basis plus
    random skew-adjoint elements. With brute_check the bracket-equation
    solver must land on the same map, with a central difference.
    """
    rep = VerificationReport(
        "two-local reconstruction campaign", anchor="theorem 2.6",
        config={"ring": ring.name, "n": n, "trials": trials, "gauge": gauge,
                "p_sweep": bool(p_sweep), "random_checks": random_checks,
                "brute_check": bool(brute_check)},
        seed=seed)
    if n < 3:
        raise NeedThreeIndices("two-local reconstruction needs size at least 3")
    master = random.Random(seed)
    labels = basis_labels(n)
    basis = list(zip(labels, canonical_basis(n, ring)))
    zero = zeros(n, ring)
    for trial in range(trials):
        trial_seed = master.randrange(2 ** 32)
        rng = random.Random(trial_seed)
        a0 = random_skew(rng, n, ring)
        oracle = GaugedInnerTwoLocal(a0, seed=trial_seed, gauge=gauge)
        abar = reconstruct_implementer(oracle)
        elements = list(basis)
        for k in range(random_checks):
            elements.append(("random#%d" % k, random_skew(rng, n, ring)))
        bad = verify_implementer(oracle, abar, elements)
        payload = {"trial": trial, "trial_seed": trial_seed}
        if bad:
            payload["failed_at"] = bad[:5]
        rep.add("reconstruct and verify #%d" % trial, not bad, **payload)
        gauge_diff = abar - a0
        rep.add("difference from seed is central #%d" % trial,
                all(bracket(gauge_diff, b) == zero for _, b in basis),
                trial=trial)
        if p_sweep:
            sweep = check_pair_lemmas(oracle)
            rep.add("extraction choice sweep #%d" % trial, sweep.passed,
                    trial=trial,
                    failures=[r.name for r in sweep.failures()][:5])
        if brute_check:
            try:
                cand = brute_force_implementer(oracle)
            except Infeasible as exc:
                rep.add("bracket solver agrees #%d" % trial, False,
                        anchor="theorem 2.6", trial=trial, error=str(exc))
                continue
            same = all(bracket(cand, b) == delta_eval(oracle, b)
                       for _, b in basis)
            central = all(bracket(cand - abar, b) == zero for _, b in basis)
            rep.add("bracket solver agrees #%d" % trial, same and central,
                    anchor="theorem 2.6", trial=trial,
                    same_map=same, central_difference=central)
    return rep
