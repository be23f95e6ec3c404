"""Truncated Laurent series.

A series stores ``coeffs[i]`` as the coefficient of ``w**(val + i)`` and is
known exactly through the exponent ``order`` (inclusive), so
``len(coeffs) == order - val + 1``.  Coefficients may live in any field that
supports ``+ - * /`` and truth testing; rational coefficients are the common
case.
"""
from fractions import Fraction

from .poly import pshift, trim
from .ratfunc import RatFunc

INFINITY = "infinity"


def ps_inverse(d, n):
    """First n coefficients of 1/d for a power series list d with d[0] != 0."""
    if not d or not d[0]:
        raise ZeroDivisionError("power series with zero constant term")
    inv0 = 1 / d[0]
    out = [inv0]
    for k in range(1, n):
        acc = None
        for j in range(1, min(k, len(d) - 1) + 1):
            if d[j]:
                t = d[j] * out[k - j]
                acc = t if acc is None else acc + t
        out.append(inv0 - inv0 if acc is None else -acc * inv0)
    return out


def ps_mul(a, b, n):
    zero = (a[0] - a[0]) if a else (b[0] - b[0]) if b else Fraction(0)
    out = [zero] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j in range(min(len(b), n - i)):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return out


class LaurentSeries:
    r"""
    Truncated Laurent series about ``center`` in the local parameter ``w``.

    >>> s = LaurentSeries([1, 1, 1], val=0)
    >>> (s * s).coeffs
    [Fraction(1, 1), Fraction(2, 1), Fraction(3, 1)]
    """

    __slots__ = ("val", "coeffs", "order", "center")

    def __init__(self, coeffs, val=0, order=None, center=0, zero=None):
        coeffs = list(coeffs)
        if coeffs and isinstance(coeffs[0], int):
            coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = val + len(coeffs) - 1
        n = order - val + 1
        if n < 0:
            val, n = order + 1, 0
        if len(coeffs) < n:
            z = zero if zero is not None else (coeffs[0] - coeffs[0] if coeffs else Fraction(0))
            coeffs = coeffs + [z] * (n - len(coeffs))
        self.coeffs = coeffs[:n]
        self.val = val
        self.order = order
        self.center = center

    # --- basic accessors -------------------------------------------------
    def _zero(self):
        return self.coeffs[0] - self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, e):
        if e > self.order:
            raise IndexError("exponent %d beyond truncation order %d" % (e, self.order))
        if e < self.val:
            return self._zero()
        return self.coeffs[e - self.val]

    coefficient = __getitem__

    def normalized(self):
        """Drop leading zero coefficients so that ``val`` is the true valuation."""
        i = 0
        while i < len(self.coeffs) and not self.coeffs[i]:
            i += 1
        if i == 0:
            return self
        return LaurentSeries(self.coeffs[i:], self.val + i, self.order, self.center)

    def valuation(self):
        return self.normalized().val

    def is_zero(self):
        return not any(self.coeffs)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return LaurentSeries(self.coeffs, self.val, order, self.center)

    def residue(self):
        return self[-1]

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    # --- arithmetic ------------------------------------------------------
    def _like(self, c):
        return LaurentSeries([c], 0, self.order, self.center)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = self._like(other)
        order = min(self.order, other.order)
        val = min(self.val, other.val)
        out = []
        for e in range(val, order + 1):
            a = self.coeffs[e - self.val] if self.val <= e else None
            b = other.coeffs[e - other.val] if other.val <= e else None
            if a is None:
                out.append(b)
            elif b is None:
                out.append(a)
            else:
                out.append(a + b)
        return LaurentSeries(out, val, order, self.center, zero=self._zero())

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.val, self.order, self.center)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return LaurentSeries([c * other for c in self.coeffs], self.val, self.order,
                                 self.center)
        a, b = self.normalized(), other.normalized()
        order = min(a.order + b.val, b.order + a.val)
        val = a.val + b.val
        n = order - val + 1
        if n <= 0:
            return LaurentSeries([], val, order, self.center)
        return LaurentSeries(ps_mul(a.coeffs, b.coeffs, n), val, order, self.center)

    def __rmul__(self, other):
        return LaurentSeries([other * c for c in self.coeffs], self.val, self.order, self.center)

    def inverse(self):
        a = self.normalized()
        if not a.coeffs:
            raise ZeroDivisionError("series is zero to its known precision")
        n = len(a.coeffs)
        return LaurentSeries(ps_inverse(a.coeffs, n), -a.val, -a.val + n - 1, self.center)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return LaurentSeries([c / other for c in self.coeffs], self.val, self.order, self.center)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            a = self.normalized()
            return LaurentSeries([self._zero() + 1], 0, max(a.order - a.val, 0), self.center)
        out = None
        base = self
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def derivative(self):
        return LaurentSeries([c * (self.val + i) for i, c in enumerate(self.coeffs)],
                             self.val - 1, self.order - 1, self.center)

    def integral(self):
        """Termwise antiderivative with zero constant term."""
        if self.val <= -1 <= self.order and self[-1]:
            raise ValueError("series has a logarithmic term")
        out = []
        for i, c in enumerate(self.coeffs):
            e = self.val + i
            out.append(c / (e + 1) if e != -1 else c * 0)
        return LaurentSeries(out, self.val + 1, self.order + 1, self.center)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return False
        order = min(self.order, other.order)
        lo = min(self.val, other.val)
        return all(self[e] == other[e] for e in range(lo, order + 1))

    def __repr__(self):
        terms = ["%s*w^%d" % (c, e) for e, c in self.items()]
        body = " + ".join(terms) if terms else "0"
        return "LaurentSeries(%s + O(w^%d) at %s)" % (body, self.order + 1, self.center)


def _poly_valuation(c):
    i = 0
    while i < len(c) and not c[i]:
        i += 1
    return i


def expand_quotient(num, den, order, center=0):
    """Laurent expansion of num(w)/den(w) (coefficient lists in w) at w=0."""
    vn, vd = _poly_valuation(num), _poly_valuation(den)
    if vd == len(den):
        raise ZeroDivisionError("zero denominator")
    if vn == len(num):
        return LaurentSeries([], order + 1, order, center)
    val = vn - vd
    n = order - val + 1
    if n <= 0:
        return LaurentSeries([], order + 1, order, center)
    inv = ps_inverse(den[vd:], n)
    return LaurentSeries(ps_mul(num[vn:], inv, n), val, order, center)


def series_expand(f, center, order):
    r"""
    Laurent expansion of the rational function ``f`` at ``center`` through
    the exponent ``order`` of the local parameter (``w = z - center``, or
    ``w = 1/z`` at infinity).

    >>> z = RatFunc.gen()
    >>> series_expand((1 + z) / (1 - z), 0, 3).coeffs
    [Fraction(1, 1), Fraction(2, 1), Fraction(2, 1), Fraction(2, 1)]
    """
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    if center == INFINITY:
        dn, dd = f.num.degree(), f.den.degree()
        if f.num.is_zero():
            return LaurentSeries([], order + 1, order, center)
        num = f.num.reverse().coeffs
        den = f.den.reverse().coeffs
        s = expand_quotient(num, den, order - (dd - dn), center)
        return LaurentSeries(s.coeffs, s.val + dd - dn, order, center)
    alpha = Fraction(center)
    num = pshift(f.num.coeffs, alpha)
    den = pshift(f.den.coeffs, alpha)
    return expand_quotient(num, den, order, center)


def compose(f, g):
    """f(g(w)) for g of positive valuation; f a truncated Laurent series."""
    g = g.normalized()
    m = g.val
    if m < 1:
        raise ValueError("inner series must vanish at the origin")
    f = f.normalized()
    rel_g = g.order - m
    order = min(m * (f.order + 1) - 1, m * f.val + rel_g)
    acc = LaurentSeries([], order + 1, order, g.center)
    gp = g ** f.val if f.val != 0 else LaurentSeries([Fraction(1)], 0, order, g.center)
    for e in range(f.val, f.order + 1):
        if gp.val > order:
            break
        c = f[e]
        if c:
            acc = acc + gp * c
        gp = gp * g
    return acc.truncate(order) if acc.order > order else acc


def revert(f, order):
    """Compositional inverse h with f(h(t)) = t, for f = a1*w + a2*w^2 + ...

    Returns h through t^order.
    """
    f = f.normalized()
    if f.val != 1:
        raise ValueError("reversion needs valuation exactly one")
    a1 = f.coeffs[0]
    h = [Fraction(0), 1 / a1]
    for k in range(2, order + 1):
        hs = LaurentSeries(h + [Fraction(0)], 0, k)
        fh = compose(f.truncate(max(k, f.val)), hs) if f.order >= k else None
        if fh is None:
            raise ValueError("input series too short for requested order")
        err = fh[k]
        h.append(-err / a1)
    return LaurentSeries(h, 0, order)


def poly_to_series(c, center=0, order=None):
    c = trim(list(c))
    return LaurentSeries(c, 0, order if order is not None else len(c) - 1, center)
