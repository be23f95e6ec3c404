"""Sparse multivariate polynomials over Q and tensor-grid interpolation."""
from fractions import Fraction
from itertools import product


class MPoly:
    r"""
    Polynomial in ``nvars`` variables stored as ``{exponent tuple: Fraction}``.

    >>> x, y = MPoly.gens(2)
    >>> ((x + y) ** 2).terms[(1, 1)]
    Fraction(2, 1)
    """

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars, terms=None, names=None):
        self.nvars = nvars
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}
        self.names = names or tuple("x%d" % (i + 1) for i in range(nvars))

    @classmethod
    def gens(cls, nvars, names=None):
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(nvars, {tuple(e): 1}, names))
        return out

    @classmethod
    def const(cls, c, nvars, names=None):
        return cls(nvars, {(0,) * nvars: c}, names)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other, self.nvars, self.names)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return MPoly(self.nvars, t, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {k: -v for k, v in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return MPoly(self.nvars, {k: v * other for k, v in self.terms.items()}, self.names)
        t = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return MPoly(self.nvars, t, self.names)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, k):
        out = MPoly.const(1, self.nvars, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def degree_in(self, i):
        return max((k[i] for k in self.terms), default=-1)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def __call__(self, *point):
        total = Fraction(0)
        for k, v in self.terms.items():
            t = v
            for x, e in zip(point, k):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def compose(self, polys):
        """Substitute the i-th variable by ``polys[i]`` (MPoly values)."""
        target = polys[0]
        out = MPoly(target.nvars, {}, target.names)
        cache = {}
        for k, v in self.terms.items():
            t = MPoly.const(v, target.nvars, target.names)
            for i, e in enumerate(k):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = polys[i] ** e
                    t = t * cache[key]
            out = out + t
        return out

    def extend(self, nvars, positions=None, names=None):
        """Embed into a ring with more variables (variable i goes to positions[i])."""
        positions = positions or list(range(self.nvars))
        t = {}
        for k, v in self.terms.items():
            e = [0] * nvars
            for i, p in enumerate(positions):
                e[p] = k[i]
            t[tuple(e)] = v
        return MPoly(nvars, t, names)

    def derivative(self, i):
        t = {}
        for k, v in self.terms.items():
            if k[i]:
                e = list(k)
                e[i] -= 1
                t[tuple(e)] = v * k[i]
        return MPoly(self.nvars, t, self.names)

    def antiderivative(self, i):
        t = {}
        for k, v in self.terms.items():
            e = list(k)
            e[i] += 1
            t[tuple(e)] = v / e[i]
        return MPoly(self.nvars, t, self.names)

    def permute(self, perm):
        """Variable i of the result is variable perm[i] of self."""
        t = {tuple(k[perm[i]] for i in range(self.nvars)): v for k, v in self.terms.items()}
        return MPoly(self.nvars, t, self.names)

    def is_symmetric(self):
        from itertools import permutations
        return all(self.permute(p) == self for p in permutations(range(self.nvars)))

    def __repr__(self):
        return "MPoly(%s)" % self.pretty()

    def pretty(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            v = self.terms[k]
            mono = "*".join(self.names[i] + ("^%d" % e if e > 1 else "")
                            for i, e in enumerate(k) if e)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (v, mono))
        return " + ".join(parts).replace("+ -", "- ")


def lagrange_basis(nodes, j):
    """Univariate Lagrange basis polynomial as a coefficient list."""
    coeffs = [Fraction(1)]
    denom = Fraction(1)
    for m, x in enumerate(nodes):
        if m == j:
            continue
        coeffs = [Fraction(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= x * coeffs[i + 1]
        denom *= nodes[j] - x
    return [c / denom for c in coeffs]


def interpolate_grid(f, node_lists, transform=None):
    r"""
    Tensor-product Lagrange interpolation.

    ``f`` is evaluated at every point of the grid ``node_lists[0] x ...``.
    If ``transform`` is given (e.g. squaring) the interpolation variable for
    a node x is ``transform(x)``; the result is a polynomial in those
    transformed variables.
    """
    n = len(node_lists)
    tnodes = [[Fraction(transform(x)) if transform else Fraction(x) for x in nodes]
              for nodes in node_lists]
    bases = [[lagrange_basis(tn, j) for j in range(len(tn))] for tn in tnodes]
    terms = {}
    for idx in product(*[range(len(nl)) for nl in node_lists]):
        val = Fraction(f(tuple(node_lists[i][idx[i]] for i in range(n))))
        if not val:
            continue
        partial = {(): val}
        for i in range(n):
            b = bases[i][idx[i]]
            nxt = {}
            for k, v in partial.items():
                for e, c in enumerate(b):
                    if c:
                        nxt[k + (e,)] = nxt.get(k + (e,), 0) + v * c
            partial = nxt
        for k, v in partial.items():
            terms[k] = terms.get(k, 0) + v
    return MPoly(n, terms)
