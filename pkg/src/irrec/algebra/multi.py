"""Multivariate rational functions in tower form.

A :class:`MultiRatFunc` over the ordered variables ``(v1, v2, ..., vk)`` is a
univariate rational function in ``v1`` whose coefficients are
``MultiRatFunc`` values over ``(v2, ..., vk)``; at the bottom of the tower
the coefficients are ``Fraction``.  Each level is kept reduced with a monic
denominator, which makes the representation canonical, so equality is
structural.
"""
import re
from fractions import Fraction

from .poly import padd, pdivmod, pgcd, pmul, pneg, pderiv, pshift, trim
from .ratfunc import RatFunc
from .series import ps_inverse, ps_mul


def var_key(name):
    m = re.match(r"^(.*?)(\d*)$", name)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def _one(sub):
    return MultiRatFunc.const(1, sub) if sub else Fraction(1)


def _zero(sub):
    return MultiRatFunc.const(0, sub) if sub else Fraction(0)


def _lift_coef(c, sub):
    if isinstance(c, MultiRatFunc):
        return c.lift(sub)
    return MultiRatFunc.const(c, sub) if sub else Fraction(c)


def _is_subsequence(small, big):
    it = iter(big)
    return all(v in it for v in small)


class MultiRatFunc:
    r"""
    Element of Q(v1, ..., vk) in tower form.

    >>> z1, z2 = MultiRatFunc.gens("z1", "z2")
    >>> f = 1 / (z1 - z2) ** 2
    >>> f.subs({"z2": -z1}) == 1 / (4 * z1 ** 2)
    True
    """

    __slots__ = ("vars", "num", "den")

    # --- construction ----------------------------------------------------
    @classmethod
    def _raw(cls, vars, num, den):
        f = object.__new__(cls)
        f.vars, f.num, f.den = vars, num, den
        return f

    @classmethod
    def _make(cls, vars, num, den):
        num, den = trim(list(num)), trim(list(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        sub = vars[1:]
        if not num:
            return cls._raw(vars, [], [_one(sub)])
        if len(den) > 1:
            g = pgcd(num, den)
            if len(g) > 1:
                num = pdivmod(num, g)[0]
                den = pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            inv = 1 / lead
            num = [c * inv for c in num]
            den = [c * inv for c in den]
            den[-1] = _one(sub)
        return cls._raw(vars, num, den)

    @classmethod
    def const(cls, c, vars):
        vars = tuple(vars)
        sub = vars[1:]
        c = _lift_coef(c, sub) if not isinstance(c, MultiRatFunc) else c.lift(sub)
        return cls._raw(vars, trim([c]), [_one(sub)])

    @classmethod
    def gen(cls, name, vars=None):
        vars = tuple(vars) if vars else (name,)
        if name not in vars:
            raise ValueError("unknown variable %r" % name)
        if vars[0] == name:
            sub = vars[1:]
            return cls._raw(vars, [_zero(sub), _one(sub)], [_one(sub)])
        return cls._raw(vars, [cls.gen(name, vars[1:])], [_one(vars[1:])])

    @classmethod
    def gens(cls, *names):
        vars = tuple(sorted(names, key=var_key))
        return tuple(cls.gen(n, vars) for n in names)

    @classmethod
    def from_ratfunc(cls, r, vars=None):
        vars = tuple(vars) if vars else (r.var,)
        x = cls.gen(r.var, vars)
        return r.num.compose(x) / r.den.compose(x)

    # --- variable handling -------------------------------------------------
    def lift(self, vars):
        vars = tuple(vars)
        if vars == self.vars:
            return self
        if not _is_subsequence(self.vars, vars):
            return self.reorder(vars)
        sub = vars[1:]
        if vars[0] == self.vars[0]:
            return MultiRatFunc._raw(vars, [_lift_coef(c, sub) for c in self.num],
                                     [_lift_coef(c, sub) for c in self.den])
        return MultiRatFunc._raw(vars, [self.lift(sub)], [_one(sub)])

    def reorder(self, vars):
        """Re-express in a different variable order (must contain all variables)."""
        vars = tuple(vars)
        missing = set(self.vars) - set(vars)
        if missing:
            raise ValueError("variables %s missing from target order" % sorted(missing))
        env = {v: MultiRatFunc.gen(v, vars) for v in self.vars}
        out = self._eval(env)
        return out if isinstance(out, MultiRatFunc) else MultiRatFunc.const(out, vars)

    def _unify(self, other):
        if isinstance(other, MultiRatFunc):
            if other.vars == self.vars:
                return self, other
            if _is_subsequence(other.vars, self.vars):
                return self, other.lift(self.vars)
            if _is_subsequence(self.vars, other.vars):
                return self.lift(other.vars), other
            vars = tuple(sorted(set(self.vars) | set(other.vars), key=var_key))
            return self.lift(vars), other.lift(vars)
        if isinstance(other, RatFunc):
            return self._unify(MultiRatFunc.from_ratfunc(other))
        if isinstance(other, (int, Fraction)):
            return self, MultiRatFunc.const(other, self.vars)
        return None, None

    # --- arithmetic --------------------------------------------------------
    def __add__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        if not a.num:
            return b
        if not b.num:
            return a
        if a.den == b.den:
            return MultiRatFunc._make(a.vars, padd(a.num, b.num), a.den)
        return MultiRatFunc._make(a.vars, padd(pmul(a.num, b.den), pmul(b.num, a.den)),
                                  pmul(a.den, b.den))

    __radd__ = __add__

    def __neg__(self):
        return MultiRatFunc._raw(self.vars, pneg(self.num), self.den)

    def __sub__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        if not a.num or not b.num:
            return MultiRatFunc.const(0, a.vars)
        # cross-cancel before multiplying
        g1 = pgcd(a.num, b.den)
        g2 = pgcd(b.num, a.den)
        an, bd = (pdivmod(a.num, g1)[0], pdivmod(b.den, g1)[0]) if len(g1) > 1 else (a.num, b.den)
        bn, ad = (pdivmod(b.num, g2)[0], pdivmod(a.den, g2)[0]) if len(g2) > 1 else (b.num, a.den)
        return MultiRatFunc._make(a.vars, pmul(an, bn), pmul(ad, bd))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by the zero rational function")
        return MultiRatFunc._make(self.vars, self.den, self.num)

    def __truediv__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = MultiRatFunc.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        a, b = self._unify(other)
        if a is None:
            return False
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        return hash((self.vars, tuple(self.num), tuple(self.den)))

    def is_constant(self):
        if len(self.num) > 1 or len(self.den) > 1:
            return False
        if not self.num:
            return True
        c = self.num[0] / self.den[0]
        return c.is_constant() if isinstance(c, MultiRatFunc) else True

    def constant_value(self):
        if not self.num:
            return Fraction(0)
        c = self.num[0] / self.den[0]
        return c.constant_value() if isinstance(c, MultiRatFunc) else c

    # --- calculus ------------------------------------------------------------
    def derivative(self, var):
        if var not in self.vars:
            return MultiRatFunc.const(0, self.vars)
        if var == self.vars[0]:
            dn, dd = pderiv(self.num), pderiv(self.den)
        else:
            dn = trim([c.derivative(var) for c in self.num])
            dd = trim([c.derivative(var) for c in self.den])
        top = padd(pmul(dn, self.den), pneg(pmul(self.num, dd)))
        return MultiRatFunc._make(self.vars, top, pmul(self.den, self.den))

    def _eval(self, env):
        x = env[self.vars[0]]

        def horner(p):
            acc = Fraction(0)
            for c in reversed(p):
                cv = c._eval(env) if isinstance(c, MultiRatFunc) else c
                acc = acc * x + cv
            return acc

        n, d = horner(self.num), horner(self.den)
        if not d:
            raise ZeroDivisionError("substitution makes the denominator vanish")
        return n / d

    def subs(self, mapping):
        """Simultaneous substitution ``{name: value}``; values may be numbers,
        RatFunc or MultiRatFunc.  Unmapped variables are kept."""
        values = {}
        target = [v for v in self.vars if v not in mapping]
        for k, v in mapping.items():
            if isinstance(v, RatFunc):
                v = MultiRatFunc.from_ratfunc(v)
            values[k] = v
            if isinstance(v, MultiRatFunc):
                target.extend(u for u in v.vars if u not in target)
        target = tuple(sorted(set(target), key=var_key))
        if not target:
            env = dict(values)
            return self._eval(env)
        env = {v: MultiRatFunc.gen(v, target) for v in self.vars if v not in mapping}
        for k, v in values.items():
            env[k] = v.lift(target) if isinstance(v, MultiRatFunc) else v
        out = self._eval(env)
        return out if isinstance(out, MultiRatFunc) else MultiRatFunc.const(out, target)

    def __call__(self, *values):
        return self.subs(dict(zip(self.vars, values)))

    # --- display -----------------------------------------------------------
    def _poly_str(self, p):
        v = self.vars[0]
        terms = []
        for i, c in enumerate(p):
            if not c:
                continue
            if isinstance(c, MultiRatFunc):
                cs = c.pretty()
                if not (c.is_constant() and cs.lstrip("-").isdigit()):
                    cs = "(%s)" % cs
            else:
                cs = str(c)
            mono = "" if i == 0 else (v if i == 1 else "%s^%d" % (v, i))
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (cs, mono))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def pretty(self):
        if self.is_constant():
            return str(self.constant_value())
        n = self._poly_str(self.num)
        if len(self.den) == 1 and (not isinstance(self.den[0], MultiRatFunc) or self.den[0] == 1):
            return n
        return "(%s)/(%s)" % (n, self._poly_str(self.den))

    def __repr__(self):
        return "MultiRatFunc[%s](%s)" % (",".join(self.vars), self.pretty())


def residue_at(f, alpha, var=None):
    r"""
    Residue of ``f d(var)`` at ``var = alpha``; other variables are carried
    symbolically.  ``f`` may be a RatFunc (result: Fraction) or a
    MultiRatFunc (result: MultiRatFunc over the remaining variables, or a
    Fraction if none remain).

    >>> z = RatFunc.gen()
    >>> residue_at(z / ((z - 1) * (z + 1)), 1)
    Fraction(1, 2)
    """
    alpha = Fraction(alpha)
    if isinstance(f, RatFunc):
        num, den = pshift(f.num.coeffs, alpha), pshift(f.den.coeffs, alpha)
    else:
        var = var or f.vars[0]
        if f.vars[0] != var:
            f = f.reorder((var,) + tuple(v for v in f.vars if v != var))
        num, den = pshift(f.num, alpha), pshift(f.den, alpha)
    vd = 0
    while not den[vd]:
        vd += 1
    if vd == 0 or not num:
        return _residue_zero(f)
    # coefficient of w^{vd-1} in num(w)/den'(w), den' = den/w^vd
    n = vd
    inv = ps_inverse(den[vd:], n)
    prod = ps_mul(num[:n] + [num[0] - num[0]] * max(0, n - len(num)), inv, n)
    return prod[vd - 1]


def _residue_zero(f):
    if isinstance(f, RatFunc) or len(f.vars) == 1:
        return Fraction(0)
    return MultiRatFunc.const(0, f.vars[1:])


def principal_part(f, alpha):
    r"""
    Principal part of the RatFunc ``f`` at ``alpha``.

    >>> z = RatFunc.gen()
    >>> principal_part(1 / (z * z - 1), 1)
    RatFunc((1/2)/(-1 + z))
    """
    from .series import series_expand
    alpha = Fraction(alpha)
    s = series_expand(f, alpha, -1)
    z = RatFunc.gen(f.var)
    out = RatFunc(0, var=f.var)
    for e, c in s.items():
        if e < 0:
            out = out + c * (z - alpha) ** e
    return out


def substitute(f, var, g):
    """Compose: replace ``var`` in ``f`` by ``g`` (RatFunc or MultiRatFunc)."""
    if isinstance(f, RatFunc):
        if var != f.var:
            return f
        if isinstance(g, RatFunc):
            return f.compose(g)
        f = MultiRatFunc.from_ratfunc(f)
    return f.subs({var: g})


def ratfunc_arith(a, b, op):
    """Dispatch helper: ``op`` in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by the zero rational function")
        return a / b
    raise ValueError("unknown operation %r" % op)
