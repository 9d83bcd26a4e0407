"""Square matrices over a commutative involutive ring.

Matrices are immutable, carry their ring, and index entries 1-based to
match the usual e_{i,j} conventions; the JSON exchange format is 0-based
row-major (see to_json). Products pick one of three strategies:

  * either factor is sparse: accumulate over its nonzero entries only
  * Gaussian rational entries: clear denominators once and multiply
    integer matrices (three real products per complex product)
  * function ring entries: the integer strategy applied pointwise

so brackets against basis elements cost O(n^2) and dense products avoid
per-entry fraction reduction in the inner loop.
"""

from __future__ import annotations

import json
from math import lcm
from operator import mul

from .errors import DimensionMismatch, IndexOutOfRange, NotSkewAdjoint
from .rings import (
    GAUSS,
    FunctionElement,
    FunctionRing,
    GaussianField,
    GaussianRational,
)


def _check_index(n, i):
    if not 1 <= i <= n:
        raise IndexOutOfRange("index %d outside 1..%d" % (i, n))


def _int_matmul(a, b):
    """Product of two integer matrices given as tuples of row tuples."""
    cols = tuple(zip(*b))
    return [[sum(map(mul, row, col)) for col in cols] for row in a]


def _int_matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _int_matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


class Matrix:
    __slots__ = ("ring", "n", "rows", "_cache")

    def __init__(self, ring, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch("expected %d entries per row, got %d"
                                        % (n, len(r)))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def _make(ring, rows):
        # internal: rows must already be a square tuple of tuples
        out = object.__new__(Matrix)
        object.__setattr__(out, "ring", ring)
        object.__setattr__(out, "n", len(rows))
        object.__setattr__(out, "rows", rows)
        object.__setattr__(out, "_cache", {})
        return out

    def entry(self, i, j):
        """1-based entry access."""
        _check_index(self.n, i)
        _check_index(self.n, j)
        return self.rows[i - 1][j - 1]

    def _nnz(self):
        nnz = self._cache.get("nnz")
        if nnz is None:
            nnz = sum(1 for r in self.rows for v in r if v)
            self._cache["nnz"] = nnz
        return nnz

    def _nonzeros(self):
        out = []
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if v:
                    out.append((i, j, v))
        return out

    # scaled integer form for Gaussian rational entries:
    # entry[i][j] == (re[i][j] + im[i][j]*i) / den
    def _int_form(self):
        form = self._cache.get("ints")
        if form is None:
            den = 1
            for r in self.rows:
                for v in r:
                    den = lcm(den, v.d)
            re = tuple(tuple(v.a * (den // v.d) for v in r) for r in self.rows)
            im = tuple(tuple(v.b * (den // v.d) for v in r) for r in self.rows)
            form = (den, re, im)
            self._cache["ints"] = form
        return form

    def _at_point(self, k):
        """Gaussian matrix of values at one point of a function ring."""
        pts = self._cache.get("points")
        if pts is None:
            pts = {}
            self._cache["points"] = pts
        m = pts.get(k)
        if m is None:
            m = Matrix(GAUSS, tuple(tuple(v.values[k] for v in r)
                                    for r in self.rows))
            pts[k] = m
        return m

    def cache_key(self):
        key = self._cache.get("key")
        if key is None:
            ek = self.ring.element_key
            key = ";".join(",".join(ek(v) for v in r) for r in self.rows)
            self._cache["key"] = key
        return key

    def _check_compatible(self, other):
        if not isinstance(other, Matrix):
            return None
        if other.ring != self.ring:
            raise DimensionMismatch("matrices over different rings")
        if other.n != self.n:
            raise DimensionMismatch("matrix sizes %d and %d differ"
                                    % (self.n, other.n))
        return other

    def __add__(self, other):
        o = self._check_compatible(other)
        if o is None:
            return NotImplemented
        return Matrix._make(self.ring,
                            tuple(tuple(a + b for a, b in zip(ra, rb))
                                  for ra, rb in zip(self.rows, o.rows)))

    def __sub__(self, other):
        o = self._check_compatible(other)
        if o is None:
            return NotImplemented
        return Matrix._make(self.ring,
                            tuple(tuple(a - b for a, b in zip(ra, rb))
                                  for ra, rb in zip(self.rows, o.rows)))

    def __neg__(self):
        return Matrix._make(self.ring, tuple(tuple(-v for v in r)
                                             for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check_compatible(other)
            return self._matmul(other)
        return self._scale(other)

    def __rmul__(self, other):
        # scalars commute, so scalar * matrix == matrix * scalar
        return self._scale(other)

    def __matmul__(self, other):
        o = self._check_compatible(other)
        if o is None:
            return NotImplemented
        return self._matmul(o)

    def _scale(self, value):
        try:
            s = self.ring.scalar(value)
        except TypeError:
            return NotImplemented
        return Matrix(self.ring, ((s * v for v in r) for r in self.rows))

    def _matmul(self, other):
        n = self.n
        if other._nnz() <= n:
            return self._mul_sparse_right(other)
        if self._nnz() <= n:
            return self._mul_sparse_left(other)
        ring = self.ring
        if isinstance(ring, GaussianField):
            return _gauss_dense_mul(self, other)
        if isinstance(ring, FunctionRing):
            return _fnring_dense_mul(self, other)
        return self._mul_generic(other)

    def _mul_sparse_right(self, other):
        zero = self.ring.zero
        n = self.n
        out = [[zero] * n for _ in range(n)]
        rows = self.rows
        for p, j, v in other._nonzeros():
            for i in range(n):
                a = rows[i][p]
                if a:
                    out[i][j] = out[i][j] + a * v
        return Matrix._make(self.ring, tuple(map(tuple, out)))

    def _mul_sparse_left(self, other):
        zero = self.ring.zero
        n = self.n
        out = [[zero] * n for _ in range(n)]
        orows = other.rows
        for i, p, v in self._nonzeros():
            row = orows[p]
            for j in range(n):
                b = row[j]
                if b:
                    out[i][j] = out[i][j] + v * b
        return Matrix._make(self.ring, tuple(map(tuple, out)))

    def _mul_generic(self, other):
        cols = tuple(zip(*other.rows))
        zero = self.ring.zero
        out = tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b),
                              zero) for col in cols)
                    for row in self.rows)
        return Matrix._make(self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return "Matrix(%s, n=%d)" % (self.ring.name, self.n)

    def format(self):
        fmt = self.ring.format
        width = max((len(fmt(v)) for r in self.rows for v in r), default=1)
        return "\n".join(" ".join(fmt(v).rjust(width) for v in r)
                         for r in self.rows)


def _gauss_int_product(a, b):
    """Integer real and imaginary parts of a*b and the joint denominator."""
    da, are, aim = a._int_form()
    db, bre, bim = b._int_form()
    # (P + iQ)(R + iS) with three integer products
    p1 = _int_matmul(are, bre)
    p2 = _int_matmul(aim, bim)
    p3 = _int_matmul(_int_matadd(are, aim), _int_matadd(bre, bim))
    cre = _int_matsub(p1, p2)
    cim = _int_matsub(_int_matsub(p3, p1), p2)
    return cre, cim, da * db


def _gauss_of_ints(cre, cim, d):
    if d == 1:
        raw = GaussianRational._raw
        return Matrix._make(GAUSS, tuple(tuple(raw(re_v, im_v, 1)
                                               for re_v, im_v in zip(rr, ri))
                                         for rr, ri in zip(cre, cim)))
    return Matrix._make(GAUSS, tuple(tuple(GaussianRational(re_v, im_v, d)
                                           for re_v, im_v in zip(rr, ri))
                                     for rr, ri in zip(cre, cim)))


def _gauss_dense_mul(a, b):
    return _gauss_of_ints(*_gauss_int_product(a, b))


def _gauss_dense_commutator(a, b):
    lre, lim, d = _gauss_int_product(a, b)
    rre, rim, d2 = _gauss_int_product(b, a)
    if d2 != d:
        raise AssertionError("commutator denominators diverged")
    return _gauss_of_ints(_int_matsub(lre, rre), _int_matsub(lim, rim), d)


def _fnring_dense_mul(a, b):
    ring = a.ring
    pts = [a._at_point(k)._matmul(b._at_point(k)) for k in range(ring.npoints)]
    n = a.n
    return Matrix(ring, ((FunctionElement(m.rows[i][j] for m in pts)
                          for j in range(n)) for i in range(n)))


def _sparse_commutator(a, b):
    """a*b - b*a accumulated in one grid; only b's nonzeros are walked."""
    zero = a.ring.zero
    n = a.n
    out = [[zero] * n for _ in range(n)]
    arows = a.rows
    nz = b._nonzeros()
    for p, j, v in nz:
        for i in range(n):
            x = arows[i][p]
            if x:
                out[i][j] = out[i][j] + x * v
    for i, p, v in nz:
        row = arows[p]
        for j in range(n):
            y = row[j]
            if y:
                out[i][j] = out[i][j] - v * y
    return Matrix._make(a.ring, tuple(map(tuple, out)))


def commutator(a, b):
    """a*b - b*a, fusing the two products where the shapes allow it."""
    if not isinstance(b, Matrix):
        raise DimensionMismatch("commutator needs two matrices")
    a._check_compatible(b)
    n = a.n
    if b._nnz() <= n:
        return _sparse_commutator(a, b)
    if a._nnz() <= n:
        return -_sparse_commutator(b, a)
    if a.ring is GAUSS:
        return _gauss_dense_commutator(a, b)
    return a * b - b * a


def zeros(n, ring=GAUSS):
    z = ring.zero
    return Matrix(ring, ((z,) * n for _ in range(n)))


def identity(n, ring=GAUSS):
    z, o = ring.zero, ring.one
    return Matrix(ring, ((o if i == j else z for j in range(n))
                         for i in range(n)))


def matrix_unit(n, i, j, ring=GAUSS):
    """e_{i,j}: single one at 1-based position (i, j)."""
    _check_index(n, i)
    _check_index(n, j)
    z, o = ring.zero, ring.one
    return Matrix(ring, ((o if (r, c) == (i - 1, j - 1) else z
                          for c in range(n)) for r in range(n)))


def star_transpose(x):
    """(x*)^{i,j} = star of x^{j,i}."""
    star = x.ring.star
    return Matrix(x.ring, ((star(x.rows[j][i]) for j in range(x.n))
                           for i in range(x.n)))


def is_skew_adjoint(x):
    ok = x._cache.get("skew")
    if ok is None:
        star = x.ring.star
        rows = x.rows
        ok = all(star(rows[j][i]) == -rows[i][j]
                 for i in range(x.n) for j in range(i, x.n))
        x._cache["skew"] = ok
    return ok


def require_skew_adjoint(x, what="matrix"):
    if not is_skew_adjoint(x):
        raise NotSkewAdjoint("%s is not skew-adjoint" % what)
    return x


def corner(x, i, j):
    """e_{i,i} x e_{j,j}: the (i, j) entry of x parked in its own matrix."""
    _check_index(x.n, i)
    _check_index(x.n, j)
    z = x.ring.zero
    v = x.rows[i - 1][j - 1]
    return Matrix(x.ring, ((v if (r, c) == (i - 1, j - 1) else z
                            for c in range(x.n)) for r in range(x.n)))


def block_compress(x, indices):
    """Zero every entry outside the rows and columns named by indices."""
    keep = set()
    for i in indices:
        _check_index(x.n, i)
        keep.add(i - 1)
    z = x.ring.zero
    return Matrix(x.ring, ((x.rows[r][c] if r in keep and c in keep else z
                            for c in range(x.n)) for r in range(x.n)))


def at_point(x, k):
    """Values of a function-ring matrix at one point, as a Gaussian matrix."""
    if not isinstance(x.ring, FunctionRing):
        raise DimensionMismatch("at_point needs a function ring matrix")
    if not 0 <= k < x.ring.npoints:
        raise IndexOutOfRange("point index %d outside 0..%d"
                              % (k, x.ring.npoints - 1))
    return x._at_point(k)


def from_points(mats):
    """Assemble a function-ring matrix from its per-point Gaussian values."""
    mats = list(mats)
    if not mats:
        raise DimensionMismatch("need at least one point matrix")
    n = mats[0].n
    for m in mats:
        if m.n != n:
            raise DimensionMismatch("point matrices disagree on size")
        if not isinstance(m.ring, GaussianField):
            raise DimensionMismatch("point matrices must be Gaussian")
    ring = FunctionRing(len(mats))
    return Matrix(ring, ((FunctionElement(m.rows[i][j] for m in mats)
                          for j in range(n)) for i in range(n)))


def to_json(x):
    """Serialize as {"n": ..., "entries": [[...]]} with 0-based row-major
    entries rendered by the ring's text format."""
    fmt = x.ring.format
    return json.dumps({"n": x.n, "entries": [[fmt(v) for v in r]
                                             for r in x.rows]},
                      indent=2, sort_keys=True)


def from_json(text, ring=GAUSS):
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, dict) or "n" not in data or "entries" not in data:
        raise ValueError("matrix JSON needs keys 'n' and 'entries'")
    n = data["n"]
    entries = data["entries"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("matrix size must be a positive integer")
    if len(entries) != n or any(len(r) != n for r in entries):
        raise DimensionMismatch("entries do not form an %d by %d grid" % (n, n))
    return Matrix(ring, ((ring.parse(v) for v in r) for r in entries))
