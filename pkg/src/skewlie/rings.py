"""Commutative rings with involution, in exact arithmetic.

Three concrete rings are provided, all containing an imaginary unit I with
I*I == -1 and star(I) == -I, and all containing 1/2:

  * GaussianField        rational complex numbers a + b*i, star = conjugation
  * FunctionRing(k)      k-tuples of Gaussian rationals, pointwise operations
  * PolynomialRing(...)  polynomials over the Gaussian rationals whose star
                         conjugates coefficients and permutes the variables

Ring instances expose a uniform surface (zero, one, imag, star, scalar,
random_element, parse, format, ...) so the matrix and Lie layers never care
which ring they run over. Elements overload +, -, *, / and compare by value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, UnsupportedRing


def _frac_str(fr):
    return "%d/%d" % (fr.numerator, fr.denominator) if fr.denominator != 1 \
        else str(fr.numerator)


class GaussianRational:
    """a/d + (b/d)*i with integer a, b and positive integer d, gcd-reduced.

    Immutable. Arithmetic accepts int and Fraction on either side, so code
    like 2 * x or x / 2 works without explicit coercion.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(abs(a), abs(b)), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _raw(a, b, d):
        # internal: caller guarantees the triple is already reduced
        out = object.__new__(GaussianRational)
        object.__setattr__(out, "a", a)
        object.__setattr__(out, "b", b)
        object.__setattr__(out, "d", d)
        return out

    @staticmethod
    def from_fractions(re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return GaussianRational(re.numerator * (d // re.denominator),
                                im.numerator * (d // im.denominator), d)

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def is_real(self):
        return self.b == 0

    def conjugate(self):
        return self._raw(self.a, -self.b, self.d)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational(other)
        if isinstance(other, Fraction):
            return GaussianRational(other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == 1 and o.d == 1:
            return self._raw(self.a + o.a, self.b + o.b, 1)
        return GaussianRational(self.a * o.d + o.a * self.d,
                                self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == 1 and o.d == 1:
            return self._raw(self.a - o.a, self.b - o.b, 1)
        return GaussianRational(self.a * o.d - o.a * self.d,
                                self.b * o.d - o.b * self.d, self.d * o.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == 1 and o.d == 1:
            return self._raw(self.a * o.a - self.b * o.b,
                             self.a * o.b + self.b * o.a, 1)
        return GaussianRational(self.a * o.a - self.b * o.b,
                                self.a * o.b + self.b * o.a, self.d * o.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.a * o.a + o.b * o.b
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        # 1/o = conj(o) * d / (a^2 + b^2)
        return self * GaussianRational(o.a * o.d, -o.b * o.d, n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = GaussianRational(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return "GaussianRational(%d, %d, %d)" % (self.a, self.b, self.d)

    def __str__(self):
        return GAUSS.format(self)


def _gauss_format(x):
    if not x:
        return "0"
    re, im = x.re, x.im
    if im == 0:
        return _frac_str(re)
    if im == 1:
        itxt = "i"
    elif im == -1:
        itxt = "-i"
    else:
        itxt = "%s*i" % _frac_str(im)
    if re == 0:
        return itxt
    if itxt.startswith("-"):
        return "%s-%s" % (_frac_str(re), itxt[1:])
    return "%s+%s" % (_frac_str(re), itxt)


def _gauss_parse(text):
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational literal")
    # split into signed terms at +/- that are not leading and not inside a
    # fraction (fractions contain only digits and one slash, so any +/- at
    # position > 0 is a term boundary)
    terms = []
    start = 0
    for k in range(1, len(s)):
        if s[k] in "+-":
            terms.append(s[start:k])
            start = k
    terms.append(s[start:])
    total = GaussianRational()
    for t in terms:
        if not t or t in "+-":
            raise ValueError("malformed Gaussian rational %r" % text)
        if t.endswith("i"):
            body = t[:-1]
            if body.endswith("*"):
                body = body[:-1]
            if body in ("", "+"):
                fr = Fraction(1)
            elif body == "-":
                fr = Fraction(-1)
            else:
                fr = Fraction(body)
            total = total + GaussianRational.from_fractions(0, fr)
        else:
            total = total + GaussianRational.from_fractions(Fraction(t))
    return total


class GaussianField:
    """The rational complex numbers. Every nonzero element is invertible."""

    name = "gauss"

    def __init__(self):
        self.zero = GaussianRational(0)
        self.one = GaussianRational(1)
        self.imag = GaussianRational(0, 1)

    def __eq__(self, other):
        return isinstance(other, GaussianField)

    def __hash__(self):
        return hash("gauss")

    def __repr__(self):
        return "GaussianField()"

    def star(self, x):
        return x.conjugate()

    def scalar(self, value):
        out = GaussianRational._coerce(value)
        if out is None:
            raise TypeError("cannot embed %r into the Gaussian rationals" % (value,))
        return out

    def random_element(self, rng):
        return GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9),
                                rng.randint(1, 5))

    def random_real(self, rng):
        return GaussianRational(rng.randint(-9, 9), 0, rng.randint(1, 5))

    def random_real_unit(self, rng):
        a = rng.randint(1, 9) * rng.choice((1, -1))
        return GaussianRational(a, 0, rng.randint(1, 5))

    def is_invertible(self, x):
        return bool(x)

    def format(self, x):
        return _gauss_format(x)

    def parse(self, text):
        return _gauss_parse(text)

    def element_key(self, x):
        return "%d,%d,%d" % (x.a, x.b, x.d)


GAUSS = GaussianField()


class FunctionElement:
    """A tuple of Gaussian rationals under pointwise operations."""

    __slots__ = ("values",)

    def __init__(self, values):
        object.__setattr__(self, "values", tuple(values))

    def __setattr__(self, *_):
        raise AttributeError("FunctionElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FunctionElement):
            if len(other.values) != len(self.values):
                raise DimensionMismatch(
                    "function elements on %d and %d points"
                    % (len(self.values), len(other.values)))
            return other
        g = GaussianRational._coerce(other)
        if g is None:
            return None
        return FunctionElement((g,) * len(self.values))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FunctionElement(a + b for a, b in zip(self.values, o.values))

    __radd__ = __add__

    def __neg__(self):
        return FunctionElement(-v for v in self.values)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FunctionElement(a - b for a, b in zip(self.values, o.values))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FunctionElement(a * b for a, b in zip(self.values, o.values))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FunctionElement(a / b for a, b in zip(self.values, o.values))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.values == o.values

    def __hash__(self):
        return hash(self.values)

    def __bool__(self):
        return any(self.values)

    def __repr__(self):
        return "FunctionElement(%r)" % (self.values,)


class FunctionRing:
    """Gaussian-rational valued functions on a finite set of k points.

    Not a field once k > 1: an element is invertible only when it vanishes
    nowhere. project and lift move between a function and its values.
    """

    def __init__(self, npoints):
        if npoints < 1:
            raise DimensionMismatch("need at least one point, got %d" % npoints)
        self.npoints = npoints
        self.name = "fnring[%d]" % npoints
        self.zero = FunctionElement((GAUSS.zero,) * npoints)
        self.one = FunctionElement((GAUSS.one,) * npoints)
        self.imag = FunctionElement((GAUSS.imag,) * npoints)

    def __eq__(self, other):
        return isinstance(other, FunctionRing) and other.npoints == self.npoints

    def __hash__(self):
        return hash(("fnring", self.npoints))

    def __repr__(self):
        return "FunctionRing(%d)" % self.npoints

    def star(self, x):
        return FunctionElement(v.conjugate() for v in x.values)

    def scalar(self, value):
        if isinstance(value, FunctionElement):
            if len(value.values) != self.npoints:
                raise DimensionMismatch("element lives on %d points, ring on %d"
                                        % (len(value.values), self.npoints))
            return value
        return FunctionElement((GAUSS.scalar(value),) * self.npoints)

    def lift(self, values):
        vals = tuple(GAUSS.scalar(v) for v in values)
        if len(vals) != self.npoints:
            raise DimensionMismatch("expected %d values, got %d"
                                    % (self.npoints, len(vals)))
        return FunctionElement(vals)

    def project(self, x, k):
        if not 0 <= k < self.npoints:
            raise DimensionMismatch("point index %d outside 0..%d"
                                    % (k, self.npoints - 1))
        return x.values[k]

    def random_element(self, rng):
        return FunctionElement(GAUSS.random_element(rng)
                               for _ in range(self.npoints))

    def random_real(self, rng):
        return FunctionElement(GAUSS.random_real(rng)
                               for _ in range(self.npoints))

    def random_real_unit(self, rng):
        return FunctionElement(GAUSS.random_real_unit(rng)
                               for _ in range(self.npoints))

    def is_invertible(self, x):
        return all(x.values)

    def format(self, x):
        return "[%s]" % ",".join(GAUSS.format(v) for v in x.values)

    def parse(self, text):
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("function element must look like [v0,v1,...]")
        parts = s[1:-1].split(",")
        vals = tuple(GAUSS.parse(p) for p in parts)
        if len(vals) != self.npoints:
            raise DimensionMismatch("expected %d values, got %d"
                                    % (self.npoints, len(vals)))
        return FunctionElement(vals)

    def element_key(self, x):
        return "|".join(GAUSS.element_key(v) for v in x.values)


class PolyElement:
    """Sparse polynomial: monomial (sorted tuple of variable indices,
    repetition encodes powers) mapped to a nonzero Gaussian coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms",
                           {m: c for m, c in terms.items() if c})

    def __setattr__(self, *_):
        raise AttributeError("PolyElement is immutable")

    def _coerce(self, other):
        if isinstance(other, PolyElement):
            if other.ring != self.ring:
                raise DimensionMismatch("polynomials from different rings")
            return other
        g = GaussianRational._coerce(other)
        if g is None:
            return None
        return PolyElement(self.ring, {(): g})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, GAUSS.zero) + c
        return PolyElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(sorted(m1 + m2))
                c = out.get(m, GAUSS.zero) + c1 * c2
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return PolyElement(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = GaussianRational._coerce(other)
        if g is None and isinstance(other, PolyElement) and set(other.terms) <= {()}:
            g = other.terms.get((), GAUSS.zero)
        if g is None:
            return NotImplemented
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        return self * (GAUSS.one / g)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def __repr__(self):
        return "PolyElement(%s)" % self.ring.format(self)


class PolynomialRing:
    """Polynomials over the Gaussian rationals with an involution that
    conjugates coefficients and swaps variables according to star_pairs.

    star_pairs lists index pairs (p, q) meaning star maps variable p to
    variable q and back; unlisted variables are star-fixed. Variable names
    must be distinct, start with a letter, and avoid the reserved letter i.
    """

    def __init__(self, var_names, star_pairs=()):
        names = tuple(var_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for nm in names:
            if not nm or nm == "i" or not nm[0].isalpha() \
                    or not nm.replace("_", "").isalnum():
                raise ValueError("bad variable name %r" % nm)
        self.var_names = names
        self._index = {nm: k for k, nm in enumerate(names)}
        perm = list(range(len(names)))
        for p, q in star_pairs:
            perm[p], perm[q] = q, p
        if sorted(perm) != list(range(len(names))):
            raise ValueError("star_pairs is not an involution on the variables")
        self.star_perm = tuple(perm)
        self.name = "poly[%s]" % ",".join(names)
        self.zero = PolyElement(self, {})
        self.one = PolyElement(self, {(): GAUSS.one})
        self.imag = PolyElement(self, {(): GAUSS.imag})

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) \
            and other.var_names == self.var_names \
            and other.star_perm == self.star_perm

    def __hash__(self):
        return hash(("poly", self.var_names, self.star_perm))

    def __repr__(self):
        return "PolynomialRing(%r)" % (self.var_names,)

    def var(self, k):
        if not 0 <= k < len(self.var_names):
            raise DimensionMismatch("no variable with index %d" % k)
        return PolyElement(self, {(k,): GAUSS.one})

    def star(self, x):
        out = {}
        for m, c in x.terms.items():
            mm = tuple(sorted(self.star_perm[v] for v in m))
            out[mm] = out.get(mm, GAUSS.zero) + c.conjugate()
        return PolyElement(self, out)

    def scalar(self, value):
        if isinstance(value, PolyElement):
            if value.ring != self:
                raise DimensionMismatch("polynomial from a different ring")
            return value
        return PolyElement(self, {(): GAUSS.scalar(value)})

    def random_element(self, rng):
        nv = len(self.var_names)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(0, 2)
            m = tuple(sorted(rng.randrange(nv) for _ in range(deg))) if nv else ()
            terms[m] = GAUSS.random_element(rng)
        return PolyElement(self, terms)

    def random_real(self, rng):
        # star-fixed combination: q * (m + star(m)) with rational q
        x = self.random_element(rng)
        y = x + self.star(x)
        return y * GaussianRational(1, 0, 2)

    def random_real_unit(self, rng):
        return self.scalar(GAUSS.random_real_unit(rng))

    def is_invertible(self, x):
        return set(x.terms) <= {()} and bool(x.terms.get((), GAUSS.zero))

    def _format_monomial(self, m):
        parts = []
        k = 0
        while k < len(m):
            j = k
            while j < len(m) and m[j] == m[k]:
                j += 1
            nm = self.var_names[m[k]]
            parts.append(nm if j - k == 1 else "%s^%d" % (nm, j - k))
            k = j
        return "*".join(parts)

    def format(self, x):
        if not x.terms:
            return "0"
        chunks = []
        for m in sorted(x.terms, key=lambda mm: (len(mm), mm)):
            c = x.terms[m]
            mono = self._format_monomial(m)
            if c.im and c.re:
                coef = "(%s)" % _gauss_format(c)
                neg = False
            else:
                neg = (c.re < 0) or (c.im < 0)
                mag = -c if neg else c
                if mono and mag == GAUSS.one:
                    coef = ""
                else:
                    coef = _gauss_format(mag)
            body = "*".join(p for p in (coef, mono) if p)
            chunks.append(("-" if neg else "+", body or "1"))
        # first term keeps a bare minus, later terms join with spaced signs
        sign0, body0 = chunks[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in chunks[1:]:
            text += " %s %s" % (sign, body)
        return text

    def parse(self, text):
        s = text.strip()
        if s == "0":
            return self.zero
        total = self.zero
        for sign, term in _split_signed_terms(s):
            coeff = GAUSS.one if sign == "+" else -GAUSS.one
            mono = []
            for factor in _split_factors(term):
                if factor.startswith("(") and factor.endswith(")"):
                    coeff = coeff * _gauss_parse(factor[1:-1])
                elif factor in self._index:
                    mono.append(self._index[factor])
                elif "^" in factor:
                    nm, _, pw = factor.partition("^")
                    if nm not in self._index:
                        raise ValueError("unknown variable %r" % nm)
                    mono.extend([self._index[nm]] * int(pw))
                else:
                    coeff = coeff * _gauss_parse(factor)
            m = tuple(sorted(mono))
            total = total + PolyElement(self, {m: coeff})
        return total

    def element_key(self, x):
        return self.format(x)


def _split_signed_terms(s):
    """Break 'a + b - c' into [('+', 'a'), ('+', 'b'), ('-', 'c')],
    ignoring signs inside parentheses. Mixed complex coefficients are
    always parenthesized by format, so a bare top-level sign is a term
    boundary."""
    out = []
    sign = "+"
    start = 0
    depth = 0
    k = 0
    if s.startswith(("+", "-")):
        sign = s[0]
        start = k = 1
    while k < len(s):
        ch = s[k]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            out.append((sign, s[start:k].strip()))
            sign = ch
            start = k + 1
        k += 1
    out.append((sign, s[start:].strip()))
    return [(sg, t) for sg, t in out if t]


def _split_factors(term):
    out = []
    start = 0
    depth = 0
    for k, ch in enumerate(term):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            nxt = term[k + 1] if k + 1 < len(term) else ""
            prv = term[k - 1] if k else ""
            # keep '*i' attached to its numeric coefficient
            if nxt == "i" and (k + 2 == len(term) or term[k + 2] == "*") \
                    and (prv.isdigit() or prv == ")"):
                continue
            out.append(term[start:k])
            start = k + 1
    out.append(term[start:])
    return [f.strip() for f in out if f.strip()]


def imaginary_unit(ring):
    """The distinguished element I of the ring, with I*I == -1, star(I) == -I."""
    im = getattr(ring, "imag", None)
    if im is None:
        raise UnsupportedRing("ring %r has no imaginary unit" % ring)
    return im


def check_ring_axioms(ring, sample_count=25, seed=0):
    """Spot-check the commutative involutive ring laws on random samples.

    Returns a VerificationReport with one record per law; each record's
    payload counts the trials performed.
    """
    import random

    from .reporting import VerificationReport

    rng = random.Random(seed)
    rep = VerificationReport("ring axioms for %s" % ring.name,
                             anchor="ring axioms",
                             config={"ring": ring.name,
                                     "sample_count": sample_count},
                             seed=seed)
    samples = [ring.random_element(rng) for _ in range(sample_count)]
    zero, one, i_unit = ring.zero, ring.one, imaginary_unit(ring)

    def law(name, pred3):
        ok = True
        for k in range(sample_count):
            x = samples[k]
            y = samples[(k * 7 + 3) % sample_count]
            z = samples[(k * 11 + 5) % sample_count]
            if not pred3(x, y, z):
                ok = False
                break
        rep.add(name, ok, trials=sample_count)

    law("addition commutes", lambda x, y, z: x + y == y + x)
    law("addition associates", lambda x, y, z: (x + y) + z == x + (y + z))
    law("zero is neutral", lambda x, y, z: x + zero == x)
    law("negation cancels", lambda x, y, z: x + (-x) == zero)
    law("multiplication commutes", lambda x, y, z: x * y == y * x)
    law("multiplication associates", lambda x, y, z: (x * y) * z == x * (y * z))
    law("one is neutral", lambda x, y, z: x * one == x)
    law("multiplication distributes", lambda x, y, z: x * (y + z) == x * y + x * z)
    law("star is additive", lambda x, y, z: ring.star(x + y) == ring.star(x) + ring.star(y))
    law("star is multiplicative", lambda x, y, z: ring.star(x * y) == ring.star(x) * ring.star(y))
    law("star is an involution", lambda x, y, z: ring.star(ring.star(x)) == x)
    rep.add("imaginary unit squares to minus one", i_unit * i_unit == -one,
            trials=1)
    rep.add("imaginary unit is skew under star", ring.star(i_unit) == -i_unit,
            trials=1)
    rep.add("one half exists", (one / 2) + (one / 2) == one, trials=1)
    return rep
