"""Dense univariate polynomials.

The list helpers at the top work over any field whose elements support
``+ - * /`` and truth-testing (``bool(c)`` is False exactly for zero).  They
are shared by :class:`Poly` (rational coefficients) and by the tower
representation in :mod:`irrec.algebra.multi`.
"""
from fractions import Fraction
from math import gcd as igcd


def trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return trim(out)


def psub(a, b):
    return padd(a, pneg(b))


def pneg(a):
    return [-x for x in a]


def pscale(a, s):
    if not s:
        return []
    return trim([x * s for x in a])


def pmul(a, b):
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            t = x * y
            k = i + j
            out[k] = t if out[k] is None else out[k] + t
    zero = a[0] - a[0]
    return trim([zero if v is None else v for v in out])


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) <= db:
        return [], trim(a)
    q = [None] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lead
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] = a[k + j] - c * b[j]
    return trim(q), trim(a[:db])


def pmonic(a):
    if not a:
        return a
    lead = a[-1]
    return [x / lead for x in a]


def pgcd(a, b):
    """Monic gcd by the Euclidean algorithm."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, pdivmod(a, b)[1]
        b = pmonic(b) if b else b
    return pmonic(a)


def peval(a, x, zero=0):
    acc = zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pderiv(a):
    return trim([a[i] * i for i in range(1, len(a))])


def pshift(a, alpha):
    """Coefficients of p(alpha + w) as a polynomial in w."""
    c = list(a)
    n = len(c)
    # repeated synthetic division
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            c[j] = c[j] + alpha * c[j + 1]
    return trim(c)


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return out


class Poly:
    r"""
    Polynomial with rational coefficients, stored densely (index = exponent).

    >>> p = Poly([1, 0, 1])
    >>> p(2)
    Fraction(5, 1)
    >>> Poly([-1, 0, 1]) // Poly([-1, 1])
    Poly(1 + z)
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="z"):
        self.coeffs = trim([Fraction(c) for c in coeffs])
        self.var = var

    @classmethod
    def _raw(cls, coeffs, var):
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.var = var
        return p

    @classmethod
    def gen(cls, var="z"):
        return cls([0, 1], var)

    @classmethod
    def const(cls, c, var="z"):
        return cls([c], var)

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(padd(self.coeffs, other.coeffs), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(pneg(self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(psub(self.coeffs, other.coeffs), self.var)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._raw(pmul(self.coeffs, other.coeffs), self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly([1], self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        q, r = pdivmod(self.coeffs, other.coeffs)
        return Poly._raw(q, self.var), Poly._raw(r, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __call__(self, x):
        return peval(self.coeffs, x, zero=Fraction(0))

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def derivative(self):
        return Poly._raw(pderiv(self.coeffs), self.var)

    def gcd(self, other):
        return Poly._raw(pgcd(self.coeffs, other.coeffs), self.var)

    def monic(self):
        return Poly._raw(pmonic(self.coeffs), self.var)

    def shift(self, alpha):
        """Return p(alpha + w) (same variable tag)."""
        return Poly._raw(pshift(self.coeffs, Fraction(alpha)), self.var)

    def reverse(self, d=None):
        """w^d p(1/w), with d defaulting to the degree."""
        d = self.degree() if d is None else d
        c = self.coeffs + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return Poly(c[::-1], self.var)

    def compose(self, q):
        """p(q) for a Poly (or RatFunc) q."""
        acc = q * 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def content_integer(self):
        """Primitive integer coefficient list with the same roots."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = igcd(g, c)
        return [c // g for c in ints] if g else ints

    def rational_roots(self):
        """Distinct rational roots, sorted."""
        if not self.coeffs:
            raise ValueError("zero polynomial has every root")
        c = self.content_integer()
        roots = set()
        while c and c[0] == 0:
            roots.add(Fraction(0))
            c = c[1:]
        if len(c) <= 1:
            return sorted(roots)
        for p in _divisors(c[0]):
            for q in _divisors(c[-1]):
                for s in (1, -1):
                    r = Fraction(s * p, q)
                    if r not in roots and peval(c, r) == 0:
                        roots.add(r)
        return sorted(roots)

    def multiplicity(self, alpha):
        m = 0
        c = self.coeffs
        alpha = Fraction(alpha)
        while c and peval(c, alpha) == 0:
            c = pdivmod(c, [-alpha, Fraction(1)])[0]
            m += 1
        return m

    def __repr__(self):
        return "Poly(%s)" % self.pretty()

    def pretty(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = self.var if i == 1 else "%s^%d" % (self.var, i)
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (c, mono))
        return " + ".join(terms).replace("+ -", "- ")
