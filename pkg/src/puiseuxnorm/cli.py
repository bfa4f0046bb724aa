"""Command line front end; every command prints one JSON report.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral) and
exponent vectors as arrays of those. Exit status is 0 on success, 1 for bad
input and 2 when an internal certificate fails.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import CertificateError, NormalizationError
from .expr import format_poly, format_series, parse_series, parse_tuples
from .hj import hj_to_puiseux
from .lattice import FracLattice, lattice_from_generators
from .minpoly import minimal_polynomial
from .puiseux import MonomialOrder, distinguished_exponents
from .semigroup import AffineSemigroup, is_saturated, is_smooth, saturate
from .toric import toric_presentation


def encode_rational(q):
    return str(Fraction(q))


def encode_vector(v):
    return [encode_rational(x) for x in v]


def decode_vector(v):
    return tuple(Fraction(x) for x in v)


def encode_coefficient(c):
    if c.is_rational():
        return encode_rational(c.coeffs[0])
    return {"conductor": c.conductor, "coeffs": [encode_rational(x) for x in c.coeffs]}


def encode_series(xi):
    return {
        "text": format_series(xi),
        "terms": [[encode_vector(e), encode_coefficient(c)] for e, c in xi.sorted_terms()],
    }


def encode_poly(f):
    return {
        "degree": f.degree,
        "text": format_poly(f),
        "coefficients": [
            {"power": j, "series": encode_series(c)} for j, c in enumerate(f.coeffs)
        ],
    }


def encode_frac_lattice(m):
    return {"k": m.k, "hnf": [list(r) for r in m.scaled.basis], "index": m.index()}


def encode_toric(tp):
    return {
        "columns": [list(c) for c in zip(*tp.exponent_matrix)],
        "binomials": [{"plus": list(p), "minus": list(q)} for p, q in tp.binomials],
        "degree_bound": tp.degree_bound,
        "complete_up_to_degree": tp.degree_bound,
    }


def _saturation_report(n, exps, degree_bound, with_toric):
    s = AffineSemigroup(n, exps)
    sat = saturate(s)
    report = {
        "span_group": encode_frac_lattice(sat.span_group),
        "hilbert_basis": [encode_vector(v) for v in sat.hilbert_basis],
        "saturated": is_saturated(s),
        "smooth": is_smooth(sat.span_group),
    }
    if with_toric:
        tp = toric_presentation(sat.hilbert_basis, sat.span_group.k, degree_bound)
        report["toric"] = encode_toric(tp)
    return report


def run_exponents(xi, order):
    exps = distinguished_exponents(xi, order)
    group = FracLattice.from_generators(exps, xi.n)
    return {
        "series": encode_series(xi),
        "distinguished_exponents": [encode_vector(v) for v in exps],
        "span_group": encode_frac_lattice(group),
    }


def run_normalize(xi, order=None, degree_bound=None, with_minpoly=True, with_toric=True):
    """Forward pipeline: exponents, saturation, smoothness, minpoly, binomials."""
    order = order or MonomialOrder.default(xi.n)
    exps = distinguished_exponents(xi, order)
    report = {
        "series": encode_series(xi),
        "omega": encode_vector(order.weight),
        "distinguished_exponents": [encode_vector(v) for v in exps],
    }
    report.update(_saturation_report(xi.n, exps, degree_bound, with_toric))
    if with_minpoly:
        report["minimal_polynomial"] = encode_poly(minimal_polynomial(xi))
    return report


def run_saturate(n, exps, degree_bound=None, with_toric=False):
    report = {"generators": [encode_vector(v) for v in exps]}
    report.update(_saturation_report(n, exps, degree_bound, with_toric))
    return report


def run_from_hj(lattice, order=None, degree_bound=None, with_toric=False):
    """Converse pipeline from integer lattice generators."""
    res = hj_to_puiseux(lattice, order)
    report = {
        "lattice_hnf": [list(r) for r in lattice.basis],
        "m": list(res.m),
        "l_prime": encode_frac_lattice(res.l_prime),
        "exponents": [encode_vector(v) for v in res.exponents],
        "smooth": res.smooth,
        "hypersurface": res.hypersurface,
        "round_trip": res.round_trip,
    }
    if res.hypersurface:
        report["xi"] = encode_series(res.xi)
        report["minimal_polynomial"] = encode_poly(res.f)
    else:
        report["note"] = "already smooth, no hypersurface needed"
    if with_toric:
        sat = saturate(AffineSemigroup(lattice.n, res.exponents))
        tp = toric_presentation(sat.hilbert_basis, sat.span_group.k, degree_bound)
        report["toric"] = encode_toric(tp)
    return report


def _parse_omega(text, n):
    if text is None:
        return MonomialOrder.default(n)
    try:
        vals = [Fraction(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise NormalizationError("cli", f"cannot read --omega {text!r}") from None
    if len(vals) != n:
        raise NormalizationError("cli", f"--omega needs {n} entries")
    return MonomialOrder(tuple(vals))


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--vars", type=int, help="number of variables n")
    shared.add_argument("--omega", help="weight vector w1,...,wn (default all ones)")
    shared.add_argument("--degree-bound", type=int, help="degree bound D for binomials")
    shared.add_argument("--input", help="read the expression from a file")
    fmt = shared.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    shared.set_defaults(pretty=False)
    shared.add_argument("--no-timing", action="store_true", help="omit the timing field")

    parser = argparse.ArgumentParser(
        prog="puiseuxnorm", description="Normalization of Puiseux hypersurfaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("exponents", "distinguished exponents of a series"),
        ("saturate", "saturation and Hilbert basis (series or exponent list)"),
        ("normalize", "full forward pipeline for a series"),
        ("minpoly", "minimal polynomial of a series"),
        ("toric", "binomial presentation of the normalization"),
        ("from-hj", "Puiseux hypersurface from lattice generators"),
    ]:
        p = sub.add_parser(name, parents=[shared], help=help_)
        p.add_argument("expr", nargs="?", help="series, exponent list or lattice generators")
        if name == "normalize":
            p.add_argument("--skip-minpoly", action="store_true")
            p.add_argument("--skip-toric", action="store_true")
        if name == "from-hj":
            p.add_argument("--toric", action="store_true", help="also emit binomials")
    return parser


def _read_expr(args):
    if args.input:
        try:
            with open(args.input) as fh:
                return fh.read().strip()
        except OSError as exc:
            raise NormalizationError("cli", f"cannot read {args.input}: {exc.strerror}") from None
    if not args.expr:
        raise NormalizationError("cli", "no input expression given")
    return args.expr


def _series(text, args):
    xi = parse_series(text, args.vars)
    return xi, _parse_omega(args.omega, xi.n)


def dispatch(args):
    text = _read_expr(args)
    cmd = args.command
    if cmd == "from-hj":
        rows = parse_tuples(text, integer=True)
        n = args.vars or len(rows[0])
        lat = lattice_from_generators(rows, n)
        return run_from_hj(lat, _parse_omega(args.omega, n), args.degree_bound, args.toric)
    if cmd in ("saturate", "toric") and text.lstrip().startswith("("):
        exps = parse_tuples(text)
        n = args.vars or len(exps[0])
        return run_saturate(n, exps, args.degree_bound, with_toric=cmd == "toric")
    xi, order = _series(text, args)
    if cmd == "exponents":
        return run_exponents(xi, order)
    if cmd == "minpoly":
        return {"series": encode_series(xi), "minimal_polynomial": encode_poly(minimal_polynomial(xi))}
    if cmd in ("saturate", "toric"):
        exps = distinguished_exponents(xi, order)
        report = {"series": encode_series(xi)}
        report.update(run_saturate(xi.n, exps, args.degree_bound, with_toric=cmd == "toric"))
        return report
    return run_normalize(
        xi, order, args.degree_bound, not args.skip_minpoly, not args.skip_toric
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = {"command": args.command}
        report.update(dispatch(args))
    except NormalizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if not args.no_timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    print(json.dumps(report, indent=2 if args.pretty else None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
