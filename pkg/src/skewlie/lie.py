"""The Lie ring of skew-adjoint matrices and its canonical basis.

Elements are n x n matrices x with star_transpose(x) == -x over a ring
containing an imaginary unit and 1/2. The canonical basis has n^2 members,
listed in a fixed order used everywhere coefficients travel as flat lists:

    s[i,j]    = e_{i,j} - e_{j,i}          for i < j, lexicographic
    Ibar[i,j] = I*(e_{i,j} + e_{j,i})      for i < j, lexicographic
    Idiag[i]  = I*e_{i,i}                  for i = 1..n

Every skew-adjoint matrix decomposes over this basis with star-fixed
coefficients, provided the ring contains 1/2.
"""

from __future__ import annotations

from .errors import (
    ComplexWeight,
    DimensionMismatch,
    EqualIndices,
    UnsupportedRing,
    ZeroWeight,
)
from .matrices import (
    Matrix,
    commutator,
    matrix_unit,
    require_skew_adjoint,
    zeros,
)
from .rings import GAUSS, GaussianField, imaginary_unit


# basis elements are immutable and requested constantly, so the
# constructors below share one instance per (shape, ring)
_elem_memo = {}


def _memoized(kind, n, ring, key, build):
    full = (kind, n, ring, key)
    m = _elem_memo.get(full)
    if m is None:
        m = _elem_memo[full] = build()
    return m


def s_elem(n, i, j, ring=GAUSS):
    """s_{i,j} = e_{i,j} - e_{j,i}. Defined for i != j; s_{j,i} = -s_{i,j}."""
    if i == j:
        raise EqualIndices("s element needs two distinct indices, got %d" % i)
    return _memoized("s", n, ring, (i, j), lambda:
                     matrix_unit(n, i, j, ring) - matrix_unit(n, j, i, ring))


def ebar_elem(n, i, j, ring=GAUSS):
    """The symmetric unit e_{i,j} + e_{j,i} for i != j."""
    if i == j:
        raise EqualIndices("ebar element needs two distinct indices, got %d" % i)
    return _memoized("ebar", n, ring, (i, j), lambda:
                     matrix_unit(n, i, j, ring) + matrix_unit(n, j, i, ring))


def ie_bar(n, i, j, ring=GAUSS):
    """I*(e_{i,j} + e_{j,i})."""
    return _memoized("iebar", n, ring, (i, j), lambda:
                     imaginary_unit(ring) * ebar_elem(n, i, j, ring))


def ie_diag(n, i, ring=GAUSS):
    """I*e_{i,i}."""
    return _memoized("iediag", n, ring, i, lambda:
                     imaginary_unit(ring) * matrix_unit(n, i, i, ring))


def basis_labels(n):
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append("s[%d,%d]" % (i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append("Ibar[%d,%d]" % (i, j))
    for i in range(1, n + 1):
        out.append("Idiag[%d]" % i)
    return out


def canonical_basis(n, ring=GAUSS):
    def build():
        out = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(s_elem(n, i, j, ring))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(ie_bar(n, i, j, ring))
        for i in range(1, n + 1):
            out.append(ie_diag(n, i, ring))
        return tuple(out)
    return list(_memoized("basis", n, ring, (), build))


def staircase(n, weights=None, ring=GAUSS):
    """The staircase element sum of weights[k] * s[k,k+1] for k = 1..n-1.

    weights may be None or "Unit" for all ones, otherwise a sequence of
    n-1 entries that must be star-fixed (ComplexWeight otherwise) and
    invertible (ZeroWeight otherwise).
    """
    if weights is None or weights == "Unit":
        def build():
            out = zeros(n, ring)
            for k in range(1, n):
                out = out + s_elem(n, k, k + 1, ring)
            return out
        return _memoized("staircase", n, ring, (), build)
    else:
        ws = [ring.scalar(w) for w in weights]
        if len(ws) != n - 1:
            raise DimensionMismatch("need %d weights, got %d" % (n - 1, len(ws)))
        for k, w in enumerate(ws):
            if not ring.is_invertible(w):
                raise ZeroWeight("weight %d of the staircase is not invertible"
                                 % (k + 1))
            if ring.star(w) != w:
                raise ComplexWeight("weight %d of the staircase is not star-fixed"
                                    % (k + 1))
    out = zeros(n, ring)
    for k in range(1, n):
        out = out + ws[k - 1] * s_elem(n, k, k + 1, ring)
    return out


def bracket(a, b):
    """[a, b] = ab - ba."""
    return commutator(a, b)


def decompose(x):
    """Coefficients of a skew-adjoint matrix over the canonical basis.

    Returns a flat list in basis order. Coefficients are star-fixed:
    (x^{ij} - x^{ji})/2 for s[i,j], -I(x^{ij} + x^{ji})/2 for Ibar[i,j]
    and -I*x^{ii} for Idiag[i].
    """
    require_skew_adjoint(x)
    ring = x.ring
    n = x.n
    minus_i = -imaginary_unit(ring)
    half = ring.one / 2
    coeffs = []
    for i in range(n):
        for j in range(i + 1, n):
            coeffs.append((x.rows[i][j] - x.rows[j][i]) * half)
    for i in range(n):
        for j in range(i + 1, n):
            coeffs.append(minus_i * (x.rows[i][j] + x.rows[j][i]) * half)
    for i in range(n):
        coeffs.append(minus_i * x.rows[i][i])
    return coeffs


def recompose(coeffs, n, ring=GAUSS):
    """Inverse of decompose: rebuild the matrix entries directly."""
    if len(coeffs) != n * n:
        raise DimensionMismatch("expected %d coefficients, got %d"
                                % (n * n, len(coeffs)))
    i_unit = imaginary_unit(ring)
    grid = [[ring.zero] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            c = coeffs[k]
            grid[i][j] = grid[i][j] + c
            grid[j][i] = grid[j][i] - c
            k += 1
    for i in range(n):
        for j in range(i + 1, n):
            ci = coeffs[k] * i_unit
            grid[i][j] = grid[i][j] + ci
            grid[j][i] = grid[j][i] + ci
            k += 1
    for i in range(n):
        grid[i][i] = coeffs[k] * i_unit
        k += 1
    return Matrix(ring, grid)


class LinearLieMap:
    """A linear map tabulated on the canonical basis.

    values[k] is the image of canonical_basis(n)[k]. Applying the map to
    an arbitrary skew-adjoint matrix decomposes it and recombines the
    tabulated images with the same coefficients.
    """

    def __init__(self, ring, n, values):
        values = list(values)
        if len(values) != n * n:
            raise DimensionMismatch("expected %d basis images, got %d"
                                    % (n * n, len(values)))
        self.ring = ring
        self.n = n
        self.values = values

    @classmethod
    def tabulate(cls, fn, n, ring=GAUSS):
        return cls(ring, n, [fn(b) for b in canonical_basis(n, ring)])

    def apply(self, x):
        if x.n != self.n or x.ring != self.ring:
            raise DimensionMismatch("map and argument disagree on shape")
        n = self.n
        grid = [[self.ring.zero] * n for _ in range(n)]
        for c, img in zip(decompose(x), self.values):
            if not c:
                continue
            for i, row in enumerate(img.rows):
                for j, v in enumerate(row):
                    if v:
                        grid[i][j] = grid[i][j] + c * v
        return Matrix(self.ring, grid)

    def __eq__(self, other):
        if not isinstance(other, LinearLieMap):
            return NotImplemented
        return (self.ring, self.n) == (other.ring, other.n) \
            and self.values == other.values

    def __hash__(self):
        return hash((self.n, tuple(self.values)))


class InnerDerivation:
    """x -> [a, x] for a fixed skew-adjoint a."""

    def __init__(self, a):
        self.a = require_skew_adjoint(a, "derivation seed")

    def apply(self, x):
        return bracket(self.a, x)

    def as_linear_map(self):
        return LinearLieMap.tabulate(self.apply, self.a.n, self.a.ring)


def apply_linear_map(m, x):
    return m.apply(x)


def centralizer_gauge(lam, n, ring=GAUSS):
    """The central skew-adjoint element lam * I * identity.

    lam must be star-fixed so the result stays skew-adjoint; such
    elements commute with everything and are invisible to brackets.
    """
    lam = ring.scalar(lam)
    if ring.star(lam) != lam:
        raise ComplexWeight("gauge scale must be star-fixed")
    i_unit = imaginary_unit(ring)
    z = ring.zero
    v = lam * i_unit
    return Matrix(ring, ((v if i == j else z for j in range(n))
                         for i in range(n)))


def is_central(x):
    """Whether x commutes with the whole Lie ring (checked on the basis)."""
    z = zeros(x.n, x.ring)
    return all(bracket(x, b) == z for b in canonical_basis(x.n, x.ring))


def random_skew(rng, n, ring=GAUSS):
    """A random skew-adjoint matrix: free entries above the diagonal,
    imaginary-unit multiples of star-fixed samples on it."""
    i_unit = imaginary_unit(ring)
    grid = [[ring.zero] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = i_unit * ring.random_real(rng)
        for j in range(i + 1, n):
            v = ring.random_element(rng)
            grid[i][j] = v
            grid[j][i] = -ring.star(v)
    return Matrix(ring, grid)


def span_contains(target, generators):
    """Whether target lies in the Gaussian-rational span of the generators.

    Only matrices over the Gaussian rationals are supported; entries of
    all matrices are flattened and membership is decided exactly.
    """
    from .errors import Infeasible
    from .linsolve import ReducedSystem

    if not isinstance(target.ring, GaussianField):
        raise UnsupportedRing("span membership runs over the Gaussian rationals")
    gens = list(generators)
    n = target.n
    for g in gens:
        if g.n != n:
            raise DimensionMismatch("generator size %d does not match %d"
                                    % (g.n, n))
    rows = []
    for i in range(n):
        for j in range(n):
            rows.append({k: g.rows[i][j] for k, g in enumerate(gens)
                         if g.rows[i][j]})
    sys = ReducedSystem(rows, len(gens))
    flat = [target.rows[i][j] for i in range(n) for j in range(n)]
    try:
        x = sys.solve(flat)
    except Infeasible:
        return False
    rebuilt = zeros(n)
    for c, g in zip(x, gens):
        if c:
            rebuilt = rebuilt + c * g
    return rebuilt == target
