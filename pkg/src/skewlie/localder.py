"""Reconstruction of local derivations from single-element witnesses.

A local derivation hands out, for each single element x, an inner
derivation matching it there: query(x) returns the mapped value together
with a witness a satisfying [a, x] == value. The witness may change from
element to element and is only determined up to whatever centralizes x,
so none of them can be used as a global implementer directly. The
reconstruction reads

  * diagonal of d from the witness of the staircase
  * row i of d from the witness of I*e_{i,i}

and the consistency of those reads across witnesses is exactly what the
check_* functions in this module verify on concrete runs. Everything is
finite: maps are tabulated on the n^2 canonical basis elements and all
claims are checked by exact arithmetic, so no continuity or topology
enters anywhere.
"""

from __future__ import annotations

import random
from hashlib import sha256

from .errors import (
    DimensionMismatch,
    EqualIndices,
    Infeasible,
    NeedThreeIndices,
    UnsupportedRing,
    WitnessContractError,
)
from .lie import (
    LinearLieMap,
    basis_labels,
    bracket,
    canonical_basis,
    centralizer_gauge,
    decompose,
    ie_bar,
    ie_diag,
    random_skew,
    recompose,
    s_elem,
    staircase,
)
from .linsolve import ReducedSystem
from .matrices import (
    Matrix,
    at_point,
    corner,
    from_points,
    require_skew_adjoint,
    zeros,
)
from .reporting import VerificationReport
from .rings import GAUSS, FunctionElement, FunctionRing, GaussianField
from .twolocal import PreparedBracketSolver

FINITE_NOTE = ("all maps are tabulated on the finite canonical basis and "
               "verified by exact arithmetic; no continuity assumptions enter")


class GaugedInnerLocal:
    """A point-witness oracle built from one inner derivation.

    query(x) returns ([a0, x], a0 + gauge(x)) where the gauge is a
    central summand whose scale is derived from x (and varies from point
    to point over a function ring). The gauges are invisible to the
    mapped values but make every witness different, which is the freedom
    reconstruction has to tolerate.
    """

    def __init__(self, a0, seed=0, gauge="central"):
        self.a0 = require_skew_adjoint(a0, "local seed")
        self.ring = a0.ring
        self.n = a0.n
        self.seed = seed
        if gauge not in ("central", "none"):
            raise ValueError("gauge must be 'central' or 'none', got %r" % gauge)
        self.gauge = gauge
        self._witnesses = {}

    def _scale(self, key):
        def draw(t):
            msg = "%d|%s|%d" % (self.seed, key, t)
            return int.from_bytes(sha256(msg.encode()).digest()[:4],
                                  "big") % 19 - 9
        if isinstance(self.ring, FunctionRing):
            return FunctionElement(GAUSS.scalar(draw(t))
                                   for t in range(self.ring.npoints))
        return self.ring.scalar(draw(0))

    def query(self, x):
        require_skew_adjoint(x, "query argument")
        value = bracket(self.a0, x)
        if self.gauge == "none":
            return value, self.a0
        key = x.cache_key()
        w = self._witnesses.get(key)
        if w is None:
            w = self.a0 + centralizer_gauge(self._scale(key), self.n,
                                            self.ring)
            self._witnesses[key] = w
        return value, w


class TamperedLocalOracle:
    """Wrapper that lies consistently about one chosen element.

    The witness of the matching element is shifted by a skew perturbation
    and the reported value is shifted along with it, so the per-query
    witness contract still holds; only cross-witness consistency checks
    can expose the damage.
    """

    def __init__(self, base, x, perturbation):
        self.base = base
        self.ring = base.ring
        self.n = base.n
        self._key = x.cache_key()
        self.perturbation = require_skew_adjoint(perturbation, "perturbation")

    def query(self, x):
        value, w = self.base.query(x)
        if x.cache_key() == self._key:
            return value + bracket(self.perturbation, x), w + self.perturbation
        return value, w


class WitnessedLocalMap:
    """A linear map on K_n together with a witness for every element.

    Construction queries the oracle on the whole canonical basis,
    verifies the witness contract on each answer, and tabulates the map
    from the returned values. witness(x) re-checks the contract on every
    new element and memoizes the answer, so a witness that fails
    [w, x] == map(x) raises WitnessContractError at the point of use.
    """

    def __init__(self, oracle):
        self.oracle = oracle
        self.ring = oracle.ring
        self.n = oracle.n
        self._memo = {}
        values = []
        for label, b in zip(basis_labels(self.n),
                            canonical_basis(self.n, self.ring)):
            value, w = oracle.query(b)
            if bracket(w, b) != value:
                raise WitnessContractError(
                    "witness for %s does not implement the claimed value"
                    % label)
            self._memo[b.cache_key()] = w
            values.append(value)
        self.map = LinearLieMap(self.ring, self.n, values)

    def nabla(self, x):
        """The mapped value at x (linear extension off the basis)."""
        return self.map.apply(x)

    def witness(self, x):
        key = x.cache_key()
        w = self._memo.get(key)
        if w is None:
            value, w = self.oracle.query(x)
            if bracket(w, x) != value:
                raise WitnessContractError(
                    "witness does not implement the claimed value")
            if value != self.nabla(x):
                raise WitnessContractError(
                    "claimed value disagrees with the linear extension")
            self._memo[key] = w
        return w


def make_gauged_local_map(a0, seed=0, gauge="central"):
    return WitnessedLocalMap(GaugedInnerLocal(a0, seed=seed, gauge=gauge))


def build_d(lmap, weights=None):
    """Assemble the candidate implementer d.

    Diagonal entries come from the staircase witness; the off-diagonal
    entries of row i come from the witness of I*e_{i,i}. Skew-adjointness
    of the result is not forced here: it follows from (and is evidence
    for) cross-witness consistency, which the check functions verify.
    """
    n = lmap.n
    if n < 3:
        raise NeedThreeIndices("reconstruction needs size at least 3")
    ring = lmap.ring
    a2 = lmap.witness(staircase(n, weights, ring))
    grid = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = a2.rows[i][i]
    for i in range(1, n + 1):
        a_ii = lmap.witness(ie_diag(n, i, ring))
        for j in range(1, n + 1):
            if j != i:
                grid[i - 1][j - 1] = a_ii.rows[i - 1][j - 1]
    return Matrix(ring, grid)


def check_eq_5_1(lmap):
    """Row reads are column-consistent: for every pair i != k the witness
    of I*(e_{i,i} + e_{k,k}) ties the (i,k) and (k,i) entries of the two
    single-index witnesses together. One record per unordered pair."""
    n = lmap.n
    ring = lmap.ring
    rep = VerificationReport("independence of row reads", anchor="eq 5.1",
                             config={"n": n, "ring": ring.name})
    rep.note(FINITE_NOTE)
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            try:
                e_i = ie_diag(n, i, ring)
                e_k = ie_diag(n, k, ring)
                a_ii = lmap.witness(e_i)
                a_kk = lmap.witness(e_k)
                a1 = lmap.witness(e_i + e_k)
            except WitnessContractError as exc:
                rep.add("entry reads agree (%d,%d)" % (i, k), False,
                        i=i, k=k, contract_error=str(exc))
                continue
            additive = bracket(a1, e_i + e_k) == \
                bracket(a_ii, e_i) + bracket(a_kk, e_k)
            ik = a_ii.entry(i, k) == a_kk.entry(i, k)
            ki = a_ii.entry(k, i) == a_kk.entry(k, i)
            rep.add("entry reads agree (%d,%d)" % (i, k),
                    additive and ik and ki, i=i, k=k,
                    additivity=additive, entry_ik=ik, entry_ki=ki)
    return rep


_block_solvers = {}


def _block_solver(m):
    """Bracket equations of K_m probed on its whole canonical basis,
    reduced once per size. The kernel is the central line."""
    solver = _block_solvers.get(m)
    if solver is None:
        basis = canonical_basis(m)
        rows = []
        for probe in basis:
            cols = [decompose(bracket(b, probe)) for b in basis]
            for coord in range(m * m):
                rows.append({k: cols[k][coord] for k in range(m * m)
                             if cols[k][coord]})
        solver = ReducedSystem(rows, m * m)
        if solver.rank != m * m - 1:
            raise AssertionError("block system rank %d, expected %d"
                                 % (solver.rank, m * m - 1))
        _block_solvers[m] = solver
    return solver


def _extract_block(x, S):
    return Matrix(x.ring, ((x.rows[p - 1][q - 1] for q in S) for p in S))


def _embed_block(y, S, n):
    ring = y.ring
    grid = [[ring.zero] * n for _ in range(n)]
    for a, p in enumerate(S):
        for b, q in enumerate(S):
            grid[p - 1][q - 1] = y.rows[a][b]
    return Matrix(ring, grid)


def corner_implementer(lmap, indices):
    """An implementer of the map compressed to a block of indices.

    Both sides of every bracket equation are compressed to the block, so
    the unknown is a block-supported skew-adjoint matrix; it exists for
    every restriction of a local derivation and is unique up to a central
    summand of the block. Raises Infeasible when no such matrix exists,
    which is how incoherent oracles surface here.
    """
    S = sorted(set(indices))
    if len(S) < 2:
        raise EqualIndices("a block needs at least two distinct indices")
    n = lmap.n
    for p in S:
        if not 1 <= p <= n:
            raise DimensionMismatch("block index %d outside 1..%d" % (p, n))
    m = len(S)
    ring = lmap.ring
    system = _block_solver(m)
    block_basis = canonical_basis(m, ring)
    rhs = []
    targets = []
    for b_local in block_basis:
        target = _extract_block(lmap.nabla(_embed_block(b_local, S, n)), S)
        targets.append(target)
        rhs.extend(decompose(target))
    coeffs = system.solve(rhs, ring=ring)
    w_local = recompose(coeffs, m, ring)
    for b_local, target in zip(block_basis, targets):
        if bracket(w_local, b_local) != target:
            raise Infeasible("no block implementer on indices %r" % (S,))
    return _embed_block(w_local, S, n)


def assemble_abar(lmap, i, k, block_cache=None):
    """The element carried by the rows and columns of i and k.

    Off-diagonal entries in those rows and columns are read from the
    two-index block implementers of the corresponding pairs, each
    position exactly once; the two diagonal entries both come from the
    (i, k) block, so their difference is gauge-free. A shared block_cache
    dict avoids re-solving blocks across several assemblies.
    """
    n = lmap.n
    if i == k:
        raise EqualIndices("assembly needs two distinct indices")
    ring = lmap.ring
    blocks = block_cache if block_cache is not None else {}

    def block(p, q):
        key = (min(p, q), max(p, q))
        w = blocks.get(key)
        if w is None:
            w = corner_implementer(lmap, key)
            blocks[key] = w
        return w

    grid = [[ring.zero] * n for _ in range(n)]
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p == q or (p not in (i, k) and q not in (i, k)):
                continue
            grid[p - 1][q - 1] = block(p, q).rows[p - 1][q - 1]
    w_ik = block(i, k)
    grid[i - 1][i - 1] = w_ik.rows[i - 1][i - 1]
    grid[k - 1][k - 1] = w_ik.rows[k - 1][k - 1]
    return Matrix(ring, grid)


def check_lemma_4_0(lmap, i):
    """The witness of I*e_{i,i} carries correct row and column corners:
    each matches the corresponding two-index block implementer."""
    n = lmap.n
    ring = lmap.ring
    rep = VerificationReport("corner content of a diagonal witness",
                             anchor="lemma 4.0",
                             config={"n": n, "i": i, "ring": ring.name})
    rep.note(FINITE_NOTE)
    a_ii = lmap.witness(ie_diag(n, i, ring))
    for k in range(1, n + 1):
        if k == i:
            continue
        try:
            w = corner_implementer(lmap, (i, k))
        except Infeasible as exc:
            rep.add("corners against block (%d,%d)" % (i, k), False,
                    i=i, k=k, error=str(exc))
            continue
        col = corner(a_ii, k, i) == corner(w, k, i)
        row = corner(a_ii, i, k) == corner(w, i, k)
        rep.add("corners against block (%d,%d)" % (i, k), col and row,
                i=i, k=k, column_read=col, row_read=row)
    return rep


def corner_coherence(lmap, anchor_index, indices):
    """Corners of a block implementer agree with two-index blocks.

    For every ordered pair inside the block the off-diagonal corner must
    match the pair's own implementer, and diagonal entries are compared
    through their differences against the anchor index, which removes
    the central ambiguity of each block.
    """
    S = sorted(set(indices))
    if anchor_index not in S:
        raise DimensionMismatch("anchor %d is not in the block %r"
                                % (anchor_index, S))
    rep = VerificationReport("block corner coherence",
                             anchor="lemma 4.0",
                             config={"indices": S, "anchor": anchor_index,
                                     "ring": lmap.ring.name})
    w_s = corner_implementer(lmap, S)
    pair = {}
    for p in S:
        for q in S:
            if p == q:
                continue
            key = (min(p, q), max(p, q))
            if key not in pair:
                pair[key] = corner_implementer(lmap, key)
            rep.add("corner (%d,%d)" % (p, q),
                    corner(w_s, p, q) == corner(pair[key], p, q), p=p, q=q)
    m = anchor_index
    for p in S:
        if p == m:
            continue
        key = (min(p, m), max(p, m))
        w2 = pair.get(key) or corner_implementer(lmap, key)
        lhs = w_s.entry(p, p) - w_s.entry(m, m)
        rhs = w2.entry(p, p) - w2.entry(m, m)
        rep.add("diagonal difference (%d,%d)" % (p, m), lhs == rhs,
                p=p, anchor=m)
    return rep


def check_display_identities(lmap, d=None, weights=None):
    """The displayed run-time identities, one record each.

    5.3: d implements the map on every I*e_{i,i}.
    5.4: d and the assembled two-row element act identically on s_{i,k}
         and I*(e_{i,k} + e_{k,i}).
    5.5: row k of the assembled element matches the witness of I*e_{k,k}.
    5.6: column i of the assembled element matches the witness of
         I*e_{i,i}.
    5.7: assembled diagonal differences match the staircase witness.
    """
    n = lmap.n
    ring = lmap.ring
    if d is None:
        d = build_d(lmap, weights)
    rep = VerificationReport("displayed identities on witnesses",
                             anchor="eqs 5.3-5.7",
                             config={"n": n, "ring": ring.name})
    rep.note(FINITE_NOTE)
    a2 = lmap.witness(staircase(n, weights, ring))
    zero = zeros(n, ring)
    blocks = {}
    for i in range(1, n + 1):
        e_i = ie_diag(n, i, ring)
        rep.add("d implements at Idiag[%d]" % i,
                bracket(d, e_i) == lmap.nabla(e_i), anchor="eq 5.3", i=i)
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            try:
                abar = assemble_abar(lmap, i, k, block_cache=blocks)
            except (Infeasible, WitnessContractError) as exc:
                rep.add("assembled element exists (%d,%d)" % (i, k), False,
                        anchor="eq 5.4", i=i, k=k, error=str(exc))
                continue
            a_ii = lmap.witness(ie_diag(n, i, ring))
            a_kk = lmap.witness(ie_diag(n, k, ring))
            diff = abar - d
            ok54 = bracket(diff, s_elem(n, i, k, ring)) == zero \
                and bracket(diff, ie_bar(n, i, k, ring)) == zero
            rep.add("assembled element acts like d (%d,%d)" % (i, k), ok54,
                    anchor="eq 5.4", i=i, k=k)
            bad55 = [j for j in range(1, n + 1) if j != k
                     and abar.entry(k, j) != a_kk.entry(k, j)]
            rep.add("row read (%d,%d)" % (i, k), not bad55,
                    anchor="eq 5.5", i=i, k=k, disagreeing_columns=bad55)
            bad56 = [j for j in range(1, n + 1) if j != i
                     and abar.entry(j, i) != a_ii.entry(j, i)]
            rep.add("column read (%d,%d)" % (i, k), not bad56,
                    anchor="eq 5.6", i=i, k=k, disagreeing_rows=bad56)
            ok57 = abar.entry(i, i) - abar.entry(k, k) == \
                a2.entry(i, i) - a2.entry(k, k)
            rep.add("diagonal difference (%d,%d)" % (i, k), ok57,
                    anchor="eq 5.7", i=i, k=k)
    return rep


def verify_spanning_set(lmap, d=None, weights=None):
    """d implements the map on the whole canonical basis, and the
    witness-level identities behind that claim hold. Failing records
    carry the indices that exposed them."""
    if d is None:
        d = build_d(lmap, weights)
    rep = VerificationReport("implementer against the canonical basis",
                             anchor="theorem 4.4",
                             config={"n": lmap.n, "ring": lmap.ring.name})
    rep.note(FINITE_NOTE)
    for label, b in zip(basis_labels(lmap.n),
                        canonical_basis(lmap.n, lmap.ring)):
        rep.add("spans %s" % label, bracket(d, b) == lmap.nabla(b),
                basis=label)
    rep.extend(check_display_identities(lmap, d, weights))
    return rep


def verify_full(lmap, d=None, weights=None, random_checks=50, seed=0):
    """d implements the map on the basis and on random skew elements."""
    if d is None:
        d = build_d(lmap, weights)
    rep = verify_spanning_set(lmap, d, weights)
    rng = random.Random(seed)
    for t in range(random_checks):
        x = random_skew(rng, lmap.n, lmap.ring)
        rep.add("random element #%d" % t,
                bracket(d, x) == lmap.nabla(x), anchor="theorem 4.4", index=t)
    return rep


class _LiftedOracle:
    """Pointwise assembly of finitely many Gaussian point oracles."""

    def __init__(self, point_maps):
        self.point_maps = list(point_maps)
        if not self.point_maps:
            raise DimensionMismatch("need at least one point map")
        n = self.point_maps[0].n
        for pm in self.point_maps:
            if pm.n != n:
                raise DimensionMismatch("point maps disagree on size")
            if not isinstance(pm.ring, GaussianField):
                raise UnsupportedRing("point maps must run over the "
                                      "Gaussian rationals")
        self.n = n
        self.ring = FunctionRing(len(self.point_maps))

    def query(self, x):
        values = []
        witnesses = []
        for t, pm in enumerate(self.point_maps):
            xt = at_point(x, t)
            values.append(pm.nabla(xt))
            witnesses.append(pm.witness(xt))
        return from_points(values), from_points(witnesses)


def pointwise_lift(point_maps):
    """Combine per-point local maps into one over a function ring.

    The lifted map evaluates and witnesses pointwise; reconstruction and
    verification then run over the function ring unchanged."""
    return WitnessedLocalMap(_LiftedOracle(point_maps))


def brute_force_local(lmap):
    """Solve bracket equations directly for an implementer of the map."""
    return PreparedBracketSolver.for_size(lmap.n).solve_values(lmap.nabla,
                                                               lmap.ring)


def localder_campaign(ring, n, trials, seed, gauge="central",
                      random_checks=50):
    """Seeded end-to-end runs: build d, verify it spans, compare with the
    hidden seed. One block of records per trial."""
    rep = VerificationReport(
        "local reconstruction campaign", anchor="theorem 4.4",
        config={"ring": ring.name, "n": n, "trials": trials, "gauge": gauge,
                "random_checks": random_checks},
        seed=seed)
    rep.note(FINITE_NOTE)
    if n < 3:
        raise NeedThreeIndices("local reconstruction needs size at least 3")
    master = random.Random(seed)
    basis = canonical_basis(n, ring)
    zero = zeros(n, ring)
    for trial in range(trials):
        trial_seed = master.randrange(2 ** 32)
        rng = random.Random(trial_seed)
        a0 = random_skew(rng, n, ring)
        lmap = make_gauged_local_map(a0, seed=trial_seed, gauge=gauge)
        d = build_d(lmap)
        inner = verify_full(lmap, d, random_checks=random_checks,
                            seed=trial_seed)
        rep.add("build and verify #%d" % trial, inner.passed,
                trial=trial, trial_seed=trial_seed,
                failures=[r.name for r in inner.failures()][:5])
        rep.add("difference from seed is central #%d" % trial,
                all(bracket(d - a0, b) == zero for b in basis), trial=trial)
        fives = check_eq_5_1(lmap)
        rep.add("row reads independent #%d" % trial, fives.passed,
                anchor="eq 5.1", trial=trial,
                failures=[r.name for r in fives.failures()][:5])
    return rep


def lift_campaign(n, omega, trials, seed, random_checks=50):
    """Pointwise lifting runs over a function ring with omega points."""
    rep = VerificationReport(
        "pointwise lift campaign", anchor="theorem 5.1",
        config={"n": n, "omega": omega, "trials": trials,
                "random_checks": random_checks},
        seed=seed)
    rep.note(FINITE_NOTE)
    ring = FunctionRing(omega)
    master = random.Random(seed)
    basis = canonical_basis(n, ring)
    zero = zeros(n, ring)
    for trial in range(trials):
        trial_seed = master.randrange(2 ** 32)
        rng = random.Random(trial_seed)
        point_maps = [make_gauged_local_map(random_skew(rng, n),
                                            seed=trial_seed + t)
                      for t in range(omega)]
        lifted = pointwise_lift(point_maps)
        d = build_d(lifted)
        ok = True
        first_bad = None
        for t in range(random_checks):
            x = random_skew(rng, n, ring)
            lhs = lifted.nabla(x)
            if lhs != bracket(d, x):
                ok, first_bad = False, t
                break
            for pt in range(omega):
                if at_point(lhs, pt) != point_maps[pt].nabla(at_point(x, pt)):
                    ok, first_bad = False, t
                    break
            if not ok:
                break
        rep.add("lifted map verified #%d" % trial, ok, trial=trial,
                trial_seed=trial_seed, first_failure=first_bad)
        agree = True
        for pt in range(omega):
            d_pt = build_d(point_maps[pt])
            diff = at_point(d, pt) - d_pt
            if not all(bracket(diff, b) == zeros(n)
                       for b in canonical_basis(n)):
                agree = False
                break
        rep.add("projections agree with point builds #%d" % trial, agree,
                trial=trial)
        rep.add("lifted difference spans nothing #%d" % trial,
                all(bracket(d, b) == lifted.nabla(b) for b in basis) and
                all(bracket(d - from_points([pm.oracle.a0
                                             for pm in point_maps]), b) == zero
                    for b in basis),
                trial=trial)
    return rep
