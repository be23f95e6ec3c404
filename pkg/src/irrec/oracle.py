"""Brute-force counts from permutation models.

Dessins with d edges are pairs ``(s0, s1)`` in ``S_d`` with faces the
cycles of ``s2 = (s0 s1)^-1``.  The labelled count ``B_{g,n}(mu)`` is the
number of pairs with an admissible labelling of the faces, divided by d!.
Fixing ``s2`` to one permutation with labelled cycles of lengths ``mu``
divides the class size ``d!/prod mu_i`` out, so

    B_{g,n}(mu) = #{s0 : <s0, s2> transitive, genus g} / prod mu_i.

``dessins_brute_literal`` enumerates all pairs for small d and is used to
check that reduction.  Fatgraphs are handled the same way with a fixed face
permutation and a fixed-point-free edge involution.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

from .memo import DiskCache


class OracleSizeError(ValueError):
    pass


class CalibrationError(AssertionError):
    pass


D_MAX = 7
E_MAX = 8


def compose(a, b):
    """``(a b)(i) = a(b(i))``."""
    return tuple(a[i] for i in b)


def inverse(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def cycles(p):
    seen, out = [False] * len(p), []
    for i in range(len(p)):
        if not seen[i]:
            c, j = [], i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = p[j]
            out.append(c)
    return out


def cycle_count(p):
    return len(cycles(p))


def has_fixed_point(p):
    return any(p[i] == i for i in range(len(p)))


def is_transitive(size, *gens):
    parent = list(range(size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i
    comps = size
    for g in gens:
        for i in range(size):
            a, b = find(i), find(g[i])
            if a != b:
                parent[a] = b
                comps -= 1
    return comps == 1


def face_permutation(lengths):
    """Permutation whose cycles are consecutive blocks of the given lengths."""
    out, start = [], 0
    for m in lengths:
        out.extend(start + (k + 1) % m for k in range(m))
        start += m
    return tuple(out)


def _check_size(d, d_max):
    if d > d_max:
        raise OracleSizeError("size %d exceeds limit %d" % (d, d_max))


def _cached_tally(kind, shape, pruned, compute):
    cache = DiskCache()
    key = [kind, list(shape), bool(pruned)]
    hit = cache.get(key)
    if hit is not None:
        return Counter({int(g): c for g, c in hit.items()})
    tally = compute(shape, pruned)
    cache.put(key, {str(g): c for g, c in sorted(tally.items())})
    return tally


def _dessin_tally(mu, pruned):
    """``{genus: count of s0}`` with ``s2`` fixed; unnormalized."""
    d, n = sum(mu), len(mu)
    s2 = face_permutation(mu)
    s2inv = inverse(s2)
    tally = Counter()
    for s0 in permutations(range(d)):
        if pruned and has_fixed_point(s0):
            continue
        # s0 s1 s2 = id
        s1 = compose(inverse(s0), s2inv)
        if pruned and has_fixed_point(s1):
            continue
        if not is_transitive(d, s0, s2):
            continue
        chi = cycle_count(s0) + cycle_count(s1) + n - d
        tally[(2 - chi) // 2] += 1
    return tally


def dessins_brute(mu, genus=None, d_max=D_MAX, pruned=False):
    r"""
    Weighted labelled dessin count with face perimeters ``2 mu``.

    Returns ``{genus: value}`` when ``genus`` is None, else that value.

    >>> dessins_brute((3,), genus=1)
    Fraction(1, 3)
    """
    mu = tuple(int(m) for m in mu)
    _check_size(sum(mu), d_max)
    tally = _cached_tally("dessin", mu, pruned, _dessin_tally)
    norm = prod(mu)
    if genus is None:
        return {g: Fraction(c, norm) for g, c in sorted(tally.items())}
    return Fraction(tally.get(genus, 0), norm)


def pruned_brute(mu, genus=None, d_max=D_MAX):
    """Same count restricted to pairs with no fixed points in s0 or s1."""
    return dessins_brute(mu, genus, d_max, pruned=True)


def dessins_brute_literal(mu, d_max=4):
    """``{genus: value}`` by enumerating every pair in ``S_d x S_d``."""
    mu = tuple(int(m) for m in mu)
    d, n = sum(mu), len(mu)
    _check_size(d, d_max)
    want = Counter(mu)
    labellings = prod(factorial(k) for k in want.values())
    tally = Counter()
    perms = list(permutations(range(d)))
    for s0 in perms:
        for s1 in perms:
            s2 = inverse(compose(s0, s1))
            cyc = cycles(s2)
            if Counter(len(c) for c in cyc) != want:
                continue
            if not is_transitive(d, s0, s1):
                continue
            chi = cycle_count(s0) + cycle_count(s1) + n - d
            tally[(2 - chi) // 2] += labellings
    return {g: Fraction(c, factorial(d)) for g, c in sorted(tally.items())}


def calibrate():
    """Check the normalization on two fixed values before other use."""
    checks = [(dessins_brute((2,), 0), Fraction(1), "B_{0,1}(2)"),
              (dessins_brute((1, 1, 1), 0), Fraction(2), "B_{0,3}(1,1,1)"),
              (fatgraphs_brute((2, 2, 2), genus=0), Fraction(1), "N_{0,3}(2,2,2)"),
              (fatgraphs_brute((2, 2), genus=0), Fraction(1, 2), "N_{0,2}(2,2)")]
    for got, want, name in checks:
        if got != want:
            raise CalibrationError("%s = %s, expected %s" % (name, got, want))
    return True


def _involutions(free, avoid):
    """Fixed-point-free involutions on the sorted list ``free`` as pair lists.

    ``avoid(a, b)`` rejects a pair early.
    """
    if not free:
        yield []
        return
    a, rest = free[0], free[1:]
    for idx, b in enumerate(rest):
        if avoid(a, b):
            continue
        for tail in _involutions(rest[:idx] + rest[idx + 1:], avoid):
            yield [(a, b)] + tail


def _fatgraph_tally(lengths, pruned):
    total = sum(lengths)
    n = len(lengths)
    e = total // 2
    phi = face_permutation(lengths)
    phinv = inverse(phi)

    def avoid(a, b):
        # vertex permutation nu = phi o eps fixes d iff eps(d) = phi^-1(d)
        return pruned and (phinv[a] == b or phinv[b] == a)
    tally = Counter()
    for pairs in _involutions(list(range(total)), avoid):
        eps = [0] * total
        for a, b in pairs:
            eps[a], eps[b] = b, a
        eps = tuple(eps)
        if not is_transitive(total, phi, eps):
            continue
        nu = compose(phi, eps)
        chi = cycle_count(nu) - e + n
        tally[(2 - chi) // 2] += 1
    return tally


def fatgraphs_brute(lengths, pruned=False, genus=None, e_max=E_MAX):
    r"""
    Weighted labelled fatgraph count with boundary lengths ``lengths``.

    >>> fatgraphs_brute((2, 2, 2), genus=0)
    Fraction(1, 1)
    """
    lengths = tuple(int(m) for m in lengths)
    if sum(lengths) % 2:
        return {} if genus is None else Fraction(0)
    _check_size(sum(lengths) // 2, e_max)
    tally = _cached_tally("fatgraph", lengths, pruned, _fatgraph_tally)
    norm = prod(lengths)
    if genus is None:
        return {g: Fraction(c, norm) for g, c in sorted(tally.items())}
    return Fraction(tally.get(genus, 0), norm)


def _cycle_histogram(e):
    return Counter(cycle_count(p) for p in permutations(range(e)))


def disconnected_brute(v, e, e_max=7):
    """``f_bullet(v, e)``: pairs in ``S_e`` with ``c(s0) + c(s1) = v``, over e!."""
    _check_size(e, e_max)
    h = _cycle_histogram(e)
    count = sum(h[a] * h[v - a] for a in h if v - a in h)
    return Fraction(count, factorial(e))


def connected_brute(v, e, e_max=5):
    """Transitive pairs in ``S_e`` with ``c(s0) + c(s1) = v``, over e!."""
    _check_size(e, e_max)
    perms = list(permutations(range(e)))
    cc = {p: cycle_count(p) for p in perms}
    count = 0
    for s0 in perms:
        for s1 in perms:
            if cc[s0] + cc[s1] == v and is_transitive(e, s0, s1):
                count += 1
    return Fraction(count, factorial(e))


def exponential_check(E):
    """Residuals ``f_bullet - [exp of connected counts]`` for e <= E."""
    from .quantum import HLaurent, series_exp
    G = {}
    for e in range(1, E + 1):
        G[-e] = HLaurent({e - v: connected_brute(v, e) for v in range(1, 2 * e + 1)})
    Z = series_exp(G, E)
    out = {}
    for e in range(1, E + 1):
        coeff = Z.get(-e, HLaurent())
        for v in range(1, 2 * e + 1):
            out[(v, e)] = coeff[e - v] - disconnected_brute(v, e)
    return out


def compositions_upto(total, min_size=1):
    out = []

    def rec(left, prefix):
        if prefix and sum(prefix) >= min_size:
            out.append(tuple(prefix))
        for k in range(1, left + 1):
            rec(left - k, prefix + [k])
    rec(total, [])
    return out


def _dessin_cell(args):
    mu, pruned = args
    return mu, dessins_brute(mu, pruned=pruned)


def dessin_sweep(d_max, pruned=False, workers=1):
    """``{mu: {genus: value}}`` for every composition with ``|mu| <= d_max``.

    Cells are independent; with ``workers > 1`` they are spread over
    processes and merged by key, so the result does not depend on the
    worker count.
    """
    cells = [(mu, pruned) for mu in compositions_upto(d_max)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_dessin_cell, cells, chunksize=4))
    else:
        results = [_dessin_cell(c) for c in cells]
    return dict(sorted(results))


def bipartite_double_residuals(max_size):
    """``b_{0,n}(mu) - 2 N_{0,n}(2 mu)`` from the two oracles, ``|mu| <= max_size``."""
    out = {}
    for mu in compositions_upto(max_size):
        if len(mu) < 2:
            continue
        b = pruned_brute(mu, 0)
        N = fatgraphs_brute(tuple(2 * m for m in mu), pruned=True, genus=0)
        out[mu] = b - 2 * N
    return out


def bound_probe(max_size):
    """Report rows ``(g, mu, B, 2 M(2 mu))`` for the inequality ``B <= 2M``."""
    rows = []
    for mu in compositions_upto(max_size):
        B = dessins_brute(mu)
        M = fatgraphs_brute(tuple(2 * m for m in mu))
        for g in sorted(set(B) | set(M)):
            rows.append((g, mu, B.get(g, Fraction(0)), 2 * M.get(g, Fraction(0))))
    return rows


__all__ = [
    "dessins_brute", "pruned_brute", "dessins_brute_literal", "fatgraphs_brute",
    "disconnected_brute", "connected_brute", "exponential_check", "calibrate", "dessin_sweep",
    "bipartite_double_residuals", "bound_probe", "compositions_upto", "OracleSizeError",
    "CalibrationError", "face_permutation", "cycles",
]
