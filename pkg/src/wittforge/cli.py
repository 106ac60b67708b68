"""Command line entry point ``wittforge``.

Exit codes: 0 all checks OK, 1 verification failure, 2 usage or parse error,
3 precondition or domain error.
"""
from __future__ import annotations

import argparse
import sys

from . import witt
from .affine import central_charge, parse_algebra, parse_relation, relation_charge
from .charge import additive_charge, format_complex, multiplicative_charge, root_of_unity_name
from .errors import (
    ArgumentError,
    InconsistentRingError,
    ParseError,
    PreconditionError,
    TooLargeError,
    WittForgeError,
)
from .fusionring import builtin_ring, regular_object
from .parsing import metric_from_args, parse_group_spec, parse_metric_file, parse_ring_file
from .qform import is_anisotropic, is_nondegenerate, isometric, prime_factors, prime_part
from .suite import sl2_suite
from .tables import DATA_FILES, data_path, load_table, verify_all, verify_file

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _num(x: float) -> str:
    s = f"{x:.9f}".rstrip("0").rstrip(".")
    return s if s != "-0" else "0"


def _metric(args, prefix=""):
    f = getattr(args, prefix + "file", None)
    if f:
        return parse_metric_file(f)
    group = getattr(args, prefix + "group", None)
    if group is None:
        raise ParseError("give --group/--q or --file")
    q = getattr(args, prefix + "q", None)
    if q is None:
        raise ParseError("--q is required with --group")
    return metric_from_args(group, q, getattr(args, prefix + "b", None))


def _add_metric_args(p, prefix="", label=""):
    p.add_argument(f"--{prefix}file", help=f"metric group file{label}")
    p.add_argument(f"--{prefix}group", help=f"cyclic orders, e.g. 2,4{label}")
    p.add_argument(f"--{prefix}q", help=f"q on the generators, e.g. 1/4,1/8{label}")
    p.add_argument(f"--{prefix}b", action="append", metavar="I,J=FRAC",
                   help=f"off-diagonal b(e_i, e_j), 1-based{label}")


# -- metric ----------------------------------------------------------------

def cmd_metric(args) -> int:
    if args.action == "isometric":
        a, b = _metric(args), _metric(args, "other_")
        print("isometric" if isometric(a, b) else "not isometric")
        return EXIT_OK
    pm = _metric(args)
    if args.action == "classify":
        nondeg = is_nondegenerate(pm)
        words = ["nondegenerate" if nondeg else "degenerate",
                 "anisotropic" if is_anisotropic(pm) else "isotropic"]
        if nondeg:
            words.append(f"c={additive_charge(pm)}")
        print(", ".join(words))
        if nondeg:
            for p in prime_factors(pm.order):
                print(f"  {p}-part: {prime_part(pm, p).describe()}")
    elif args.action == "reduce":
        print(witt.reduce_anisotropic(pm).describe())
    elif args.action == "charge":
        xi = multiplicative_charge(pm)
        c = additive_charge(pm)
        print(f"xi={root_of_unity_name(c)} ({format_complex(xi)}), c={c}")
    return EXIT_OK


# -- witt ------------------------------------------------------------------

def _classes(specs):
    return [witt.witt_class(parse_group_spec(s)) for s in specs]


def cmd_witt(args) -> int:
    if args.action == "order":
        w = witt.witt_class(parse_group_spec(args.gen[0]) if args.gen else _metric(args))
        print(witt.order(w))
    elif args.action == "add":
        if not args.gen:
            raise ParseError("witt add needs at least one --gen")
        total = witt.zero()
        for w in _classes(args.gen):
            total = total + w
        print(total)
    elif args.action == "eq":
        # --b doubles as the second class here: a spec always has a colon
        other = [x for x in (args.b or []) if ":" in x]
        if not args.a or len(other) != 1:
            raise ParseError("witt eq needs --a SPEC and --b SPEC")
        a, b = _classes([args.a, other[0]])
        print("equal" if a == b else "distinct")
    elif args.action == "span":
        if not args.gen:
            raise ParseError("witt span needs at least one --gen")
        span = witt.generated_subgroup(_classes(args.gen), cap=args.cap)
        print(f"{len(span)} classes")
        rows = sorted((str(w.cached_charge), str(w)) for w in span)
        for c, w in rows:
            print(f"  c={c}  {w}")
    return EXIT_OK


# -- affine ----------------------------------------------------------------

def _conjectural() -> set:
    entries = load_table(data_path(DATA_FILES["relations"]), "relations")
    return {str(parse_relation(e.relation)) for e in entries if e.conjectural}


def cmd_affine(args) -> int:
    if args.action == "charge":
        for sym in args.items:
            print(central_charge(parse_algebra(sym)))
        return EXIT_OK
    if args.action == "relation":
        status = EXIT_OK
        for text in args.items:
            c = relation_charge(parse_relation(text))
            verdict = "OK" if c.is_zero() else "FAIL"
            tag = " (conjectural)" if str(parse_relation(text)) in _conjectural() else ""
            print(f"{c} mod 8 → {verdict}{tag}")
            if not c.is_zero():
                status = EXIT_FAIL
        return status
    report = sl2_suite()
    print(report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


# -- verify ----------------------------------------------------------------

def _parse_range(text):
    if text is None:
        return None
    lo, sep, hi = text.partition("..")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ParseError(f"expected --range LO..HI, got {text!r}") from None
    if not sep or lo > hi:
        raise ParseError(f"expected --range LO..HI, got {text!r}")
    return lo, hi


def cmd_verify(args) -> int:
    clamp = _parse_range(args.range)
    if args.kind == "all":
        if args.files:
            raise ParseError("verify all takes no file arguments")
        report = verify_all(clamp)
    else:
        files = args.files or [data_path(DATA_FILES[args.kind])]
        report = None
        for f in files:
            r = verify_file(f, args.kind, clamp)
            if report is None:
                report = r
            else:
                report.extend(r)
    print(report.render())
    if not report.ok:
        return EXIT_FAIL
    if args.strict and report.counts()["SKIPPED"]:
        return EXIT_FAIL
    return EXIT_OK


# -- fpdim -----------------------------------------------------------------

def cmd_fpdim(args) -> int:
    try:
        ring = builtin_ring(args.ring)
    except ArgumentError:
        ring = parse_ring_file(args.ring)
    data = ring.fp
    dims = data.dims
    if all(abs(d - 1) < 1e-9 for d in dims):
        print(f"total: {_num(data.total)}, all dims 1")
    else:
        for label, d in zip(ring.labels[1:], dims[1:]):
            print(f"{label}: {_num(d)}")
        print(f"total: {_num(data.total)}")
    regular_object(ring)
    print(f"residual: {data.residual:.3e}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wittforge", description="Witt group computations for metric groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metric", help="inspect a metric group")
    p.add_argument("action", choices=["classify", "reduce", "charge", "isometric"])
    _add_metric_args(p)
    _add_metric_args(p, "other_", " (second form for isometric)")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("witt", help="Witt class arithmetic")
    p.add_argument("action", choices=["order", "add", "eq", "span"])
    _add_metric_args(p)
    p.add_argument("--gen", action="append", metavar="SPEC", help='class as ORDERS:QDIAG[;i,j=FRAC], e.g. "2:1/4"')
    p.add_argument("--a", metavar="SPEC", help="first class for eq (the second goes in --b)")
    p.add_argument("--cap", type=int, default=witt.DEFAULT_SPAN_CAP, help="span size limit")
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("affine", help="central charges and relations")
    p.add_argument("action", choices=["charge", "relation", "sl2-suite"])
    p.add_argument("items", nargs="*")
    p.set_defaults(func=cmd_affine)

    p = sub.add_parser("verify", help="check the embedding and coset tables")
    p.add_argument("kind", choices=["embeddings", "cosets", "relations", "all"])
    p.add_argument("files", nargs="*")
    p.add_argument("--range", metavar="LO..HI", help="clamp every family parameter")
    p.add_argument("--strict", action="store_true", help="treat SKIPPED as failure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fpdim", help="Frobenius-Perron dimensions of a based ring")
    p.add_argument("ring", help="fib | ising | sl2:K | group:N1,N2 | ring file")
    p.set_defaults(func=cmd_fpdim)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistentRingError as exc:
        print(f"error: {exc} (witness {exc.witness})", file=sys.stderr)
        return EXIT_DOMAIN
    except (PreconditionError, ArgumentError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except WittForgeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
