"""Univariate rational functions over Q."""
from fractions import Fraction

from .poly import Poly


class RatFunc:
    r"""
    Rational function ``num/den`` kept gcd-reduced with monic denominator.

    >>> z = RatFunc.gen()
    >>> z / (1 + z) + 1 / (1 + z)
    RatFunc(1)
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var=None):
        if isinstance(num, RatFunc) and den is None:
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, Poly):
            num = Poly([num], var or "z")
        if den is None:
            den = Poly([1], num.var)
        elif not isinstance(den, Poly):
            den = Poly([den], num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly([], num.var), Poly([1], num.var)
            return
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num // g, den // g
        lead = den.lc()
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def gen(cls, var="z"):
        return cls(Poly.gen(var))

    @property
    def var(self):
        return self.num.var

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly([other], self.var))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree() == 0

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            d = self.den(x)
            if d == 0:
                raise ZeroDivisionError("evaluation at a pole")
            return self.num(x) / d
        return self.num.compose(x) / self.den.compose(x)

    def compose(self, g):
        """f(g(z)) for a RatFunc g."""
        return self.num.compose(g) / self.den.compose(g)

    def derivative(self):
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def poles(self):
        """Rational poles with their orders; raises if some pole is irrational."""
        roots = self.den.rational_roots()
        out = [(r, self.den.multiplicity(r)) for r in roots]
        if sum(m for _, m in out) != self.den.degree():
            raise ValueError("denominator has non-rational roots")
        return out

    def __repr__(self):
        return "RatFunc(%s)" % self.pretty()

    def pretty(self):
        if self.is_polynomial():
            return self.num.pretty()
        return "(%s)/(%s)" % (self.num.pretty(), self.den.pretty())
