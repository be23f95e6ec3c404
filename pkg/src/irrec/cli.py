"""Command line entry point: ``irrec count|invariant|verify|table``.

Exit codes: 0 success, 1 a hard verification failure, 2 a usage error.
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import product

from . import verify as V


class UsageError(Exception):
    pass


def parse_mu(text):
    try:
        mu = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError("--mu expects comma-separated integers, got %r" % text)
    if not mu or min(mu) < 1:
        raise UsageError("--mu parts must be positive")
    return mu


def rational_json(v):
    v = Fraction(v)
    return {"num": str(v.numerator), "den": str(v.denominator)}


def emit_json(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


# --- count ----------------------------------------------------------------

def cmd_count(args, out):
    from .dessins import b_big, epsilon_hz, u_count
    from .local import FULL, HALF, u_airy_rec
    from .pruned import b_pruned
    if args.g is None or args.g < 0:
        raise UsageError("--g is required and must be >= 0")
    if args.family == "epsilon":
        if args.n is None or args.n < 0:
            raise UsageError("epsilon needs --n >= 0")
        value, mu = epsilon_hz(args.g, args.n), [args.n]
    else:
        if args.mu is None:
            raise UsageError("%s needs --mu" % args.family)
        mu = parse_mu(args.mu)
        if args.family == "U":
            value = u_count(args.g, mu)
        elif args.family == "B":
            value = b_big(args.g, mu)
        elif args.family == "b":
            value = b_pruned(args.g, mu)
        else:
            value = u_airy_rec(args.g, mu, HALF if args.curve == "half" else FULL)
        mu = list(mu)
    if args.json:
        emit_json({"family": args.family, "g": args.g, "mu": mu, "value": rational_json(value)}, out)
    else:
        out.write(V.exact_str(value) + "\n")
    return 0


# --- invariant ------------------------------------------------------------

INVARIANT_CURVES = ("dessin", "airy-half", "airy", "gauss-regular", "flat-counterexample")


def cmd_invariant(args, out):
    from .curves import CurveError, expand_invariant, named_curve
    if args.g is None or args.n is None or args.g < 0 or args.n < 1 or 2 * args.g - 2 + args.n <= 0:
        raise UsageError("need --g, --n with 2g - 2 + n > 0")
    curve = named_curve(args.curve)
    try:
        w = curve.invariant(args.g, args.n)
        series = expand_invariant(w, args.order) if args.order is not None else None
    except CurveError as e:
        raise UsageError(str(e))
    if args.json:
        obj = {"curve": args.curve, "g": args.g, "n": args.n, "flags": sorted(w.flags)}
        if series is None:
            obj["terms"] = [{"poles": [[V.exact_str(a), k] for a, k in key],
                             "value": rational_json(c)} for key, c in sorted(w.terms.items())]
        else:
            obj["order"] = args.order
            obj["coefficients"] = [{"exponents": list(e), "value": rational_json(c)}
                                   for e, c in sorted(series.items()) if c]
        emit_json(obj, out)
        return 0
    for f in sorted(w.flags):
        out.write("# %s\n" % f)
    dz = " ".join("dz%d" % (i + 1) for i in range(args.n)) if args.n > 1 else "dz"
    if series is None:
        out.write("(%s) %s\n" % (w.pretty(), dz))
    else:
        for e, c in sorted(series.items()):
            if c:
                mono = " ".join("z%d^%d" % (i + 1, k) for i, k in enumerate(e))
                out.write("%s\t%s\n" % (mono, V.exact_str(c)))
    return 0


# --- verify ---------------------------------------------------------------

def cmd_verify(args, out):
    if args.dmax < 1 or args.dmax > 7:
        raise UsageError("--dmax must lie in 1..7")
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    rep = V.run_suite(args.suite, d_max=args.dmax, workers=args.threads)
    if args.json:
        emit_json(rep.as_dict(), out)
    else:
        out.write("\n".join(rep.lines()) + "\n")
    return 0 if rep.ok else 1


# --- table ----------------------------------------------------------------

COLUMNS = ["g", "n", "mu", "value_num", "value_den", "source_anchor", "status",
           "reference_num", "reference_den"]


def _row(g, n, mu, value, reference, anchor):
    value = Fraction(value)
    row = {"g": g, "n": n, "mu": ";".join(str(m) for m in mu),
           "value_num": str(value.numerator), "value_den": str(value.denominator),
           "source_anchor": anchor, "status": "computed",
           "reference_num": "", "reference_den": ""}
    if reference is not None:
        reference = Fraction(reference)
        row["reference_num"] = str(reference.numerator)
        row["reference_den"] = str(reference.denominator)
        row["status"] = V.PASS if reference == value else V.DISCREPANCY
    return row


def _sorted_parts(n, max_part):
    return [mu for mu in product(range(1, max_part + 1), repeat=n)
            if list(mu) == sorted(mu, reverse=True)]


def table_appendix(args):
    from .dessins import appendix_row, b_big, c_factor
    from math import prod
    rows = []
    for g in range(args.g_max + 1):
        for n in range(1, args.n_max + 1):
            ref = appendix_row(g, n)
            if ref is None:
                continue
            for mu in _sorted_parts(n, args.mu_max):
                val = b_big(g, mu) / prod(c_factor(g, m) for m in mu)
                rows.append(_row(g, n, mu, val, ref(mu), "B/prod c_g polynomial table"))
    return rows


def table_pruned(args):
    rows = []
    for g, n, mu, val, ref, _ in V.pruned_table_rows(args.mu_max):
        if g <= args.g_max and n <= args.n_max:
            rows.append(_row(g, n, mu, val, ref, "pruned table"))
    return rows


def table_volumes(args):
    from .local import reference_volume, volumes
    rows = []
    for g in range(1, args.g_max + 1):
        for n in range(1, args.n_max + 1):
            vol = volumes(g, n)
            ref = reference_volume(g, n)
            for e in sorted(vol.terms):
                rows.append(_row(g, n, e, vol.terms[e],
                                 None if ref is None else ref.coefficient(e),
                                 "volume polynomial coefficient of L^e"))
    return rows


def table_wave(args):
    from .quantum import f_bullet, wave_coeff
    rows = []
    for e in range(args.e_max + 1):
        a = wave_coeff(e)
        for v in range(2 * e + 1):
            val = a[e - v]
            if val:
                rows.append(_row("", e, (v,), val, f_bullet(v, e),
                                 "wave coefficient [hbar^(e-v) x^-e], n=e, mu=v"))
    return rows


TABLES = {"appendix": table_appendix, "pruned-table": table_pruned,
          "volumes": table_volumes, "wave": table_wave}


def cmd_table(args, out):
    for name in ("g_max", "n_max", "mu_max", "e_max"):
        if getattr(args, name) < 0:
            raise UsageError("range flags must be non-negative")
    if args.mu_max > 12 or args.e_max > 20 or args.g_max > 4 or args.n_max > 6:
        raise UsageError("range too large")
    rows = TABLES[args.what](args)
    if args.json or args.format == "json":
        emit_json(rows, out)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
    return 0


# --- parser ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="irrec", description="Exact counts and invariants with verification suites.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="print one count")
    c.add_argument("family", choices=["U", "B", "b", "u", "epsilon"])
    c.add_argument("--g", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--mu")
    c.add_argument("--curve", choices=["half", "full"], default="half",
                   help="normalization for family u")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    i = sub.add_parser("invariant", help="print omega^g_n or its expansion at z = 0")
    i.add_argument("--curve", choices=INVARIANT_CURVES, required=True)
    i.add_argument("--g", type=int)
    i.add_argument("--n", type=int)
    i.add_argument("--order", "--expand", dest="order", type=int)
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_invariant)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(V.SUITES))
    v.add_argument("--dmax", type=int, default=6)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="emit a table with reference comparison")
    t.add_argument("what", choices=list(TABLES))
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--json", action="store_true")
    t.add_argument("--g-max", type=int, default=3)
    t.add_argument("--n-max", type=int, default=4)
    t.add_argument("--mu-max", type=int, default=6)
    t.add_argument("--e-max", type=int, default=6)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as e:
        sys.stderr.write("irrec: error: %s\n" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
