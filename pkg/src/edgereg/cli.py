"""Command-line entry point.

Exit codes: 0 success, 1 mismatch or violated structure statement,
2 usage error (bad arguments, malformed JSON, formula not applicable),
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .betti import (
    MAX_LATTICE,
    MAX_VARIABLES,
    ResourceCapExceeded,
    betti_table,
    betti_table_quotient,
)
from .closure import ideal_integral_closure, is_integrally_closed_algebraic
from .formulas import NotIntegrallyClosed, predict
from .graphs import build_cycle, build_path, edge_ideal, is_integrally_closed_combinatorial, loads_graph
from .linalg import DEFAULT_CHAR
from .monomials import ideal_power, ideal_to_dict, loads_ideal, polarize
from .powers import TheoremViolation, colon_tail, ordered_generators, predicted_colon_tail
from .sweep import SweepConfig, run_verification_sweep

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def int_list(text: str) -> list:
    """'2,1,1' or '2-1-1' -> [2, 1, 1]."""
    sep = "," if "," in text else "-"
    try:
        return [int(x) for x in text.split(sep) if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers separated by ',' or '-', got {text!r}")


def int_range(text: str) -> list:
    """'3..7', '3:7' (inclusive) or a list like '3,5,7'."""
    for sep in ("..", ":"):
        if sep in text:
            lo, hi = text.split(sep)
            try:
                return list(range(int(lo), int(hi) + 1))
            except ValueError:
                break
    return int_list(text)


def _graph(args):
    if getattr(args, "graph", None):
        with open(args.graph) as fh:
            return loads_graph(fh.read())
    if args.weights is None:
        raise UsageError("give --weights (with --shape) or a JSON source")
    if args.shape == "cycle":
        return build_cycle(args.weights)
    if args.shape == "path":
        return build_path(args.weights)
    raise UsageError("--weights needs --shape cycle or path")


def _ideal(args):
    if getattr(args, "ideal", None):
        with open(args.ideal) as fh:
            return loads_ideal(fh.read())
    return ideal_power(edge_ideal(_graph(args)), args.t)


def _caps(args):
    return {"max_lattice": args.max_lattice, "max_vars": args.max_vars}


def cmd_predict(args):
    if args.weights is None:
        raise UsageError("predict needs --weights")
    try:
        q = predict(args.shape, args.weights, args.t)
    except NotIntegrallyClosed as exc:
        print(f"error: not integrally closed ({exc})", file=sys.stderr)
        return EXIT_USAGE
    print(f"reg(S/I^t) = {q}")
    print(f"reg(I^t) = {q + 1}")
    return EXIT_OK


def cmd_reg(args):
    T = betti_table(_ideal(args), args.char, **_caps(args))
    r = T.regularity()
    print(f"reg(S/I) = {r - 1}")
    print(f"reg(I) = {r}")
    if args.table:
        print(T)
    return EXIT_OK


def cmd_betti(args):
    I = _ideal(args)
    T = betti_table_quotient(I, args.char, **_caps(args)) if args.quotient else betti_table(I, args.char, **_caps(args))
    print(T.to_json() if args.format == "json" else T)
    return EXIT_OK


def cmd_closure(args):
    G = _graph(args)
    comb = is_integrally_closed_combinatorial(G)
    alg = is_integrally_closed_algebraic(edge_ideal(G))
    print(f"combinatorial: {str(comb).lower()}")
    print(f"algebraic: {str(alg).lower()}")
    print(f"agree: {str(comb == alg).lower()}")
    if args.show and not alg:
        print(f"closure: {ideal_integral_closure(edge_ideal(G))}")
    return EXIT_OK if comb == alg else EXIT_MISMATCH


def cmd_polarize(args):
    P, varmap = polarize(_ideal(args))
    out = ideal_to_dict(P)
    out["variables"] = [[j, k] for (j, k), _ in sorted(varmap.items(), key=lambda kv: kv[1])]
    print(json.dumps(out))
    return EXIT_OK


def cmd_factorize(args):
    O = ordered_generators(args.weights, args.t)
    rows = [{"k": k, "monomial": list(O[k]), "exponents": list(O.factorization(k).exponents),
             "in_C": O.factorization(k).exponents[0] >= 1} for k in range(1, O.r + 1)]
    if args.format == "json":
        print(json.dumps({"weights": list(O.weights), "t": O.t, "c": O.c, "generators": rows}))
    else:
        print(f"weights {O.weights}, t = {O.t}, r = {O.r}, c = {O.c}")
        for row in rows:
            print(f"{row['k']:>4}  {tuple(row['exponents'])}  {'C' if row['in_C'] else ' '}  {tuple(row['monomial'])}")
    return EXIT_OK


def cmd_colon_tail(args):
    O = ordered_generators(args.weights, args.t)
    idx = [args.i] if args.i else range(1, O.c + 1)
    status = EXIT_OK
    for i in idx:
        got, want = colon_tail(args.weights, args.t, i), predicted_colon_tail(args.weights, args.t, i)
        same = got == want
        print(f"i={i}: colon {got}  predicted {want}  {'equal' if same else 'DIFFERENT'}")
        if not same:
            status = EXIT_MISMATCH
    return status


def cmd_sweep(args):
    cfg = SweepConfig(
        shape=args.shape, n_range=tuple(args.n), alphabet=tuple(args.alphabet), t_range=tuple(args.t),
        characteristics=tuple(args.char), workers=args.workers, max_lattice=args.max_lattice,
        max_vars=args.max_vars, dedup=not args.no_dedup, out=args.out, fmt=args.format,
        timing=not args.no_timing,
    )
    report = run_verification_sweep(cfg)
    if not args.out:
        text = report.to_csv(cfg.timing) if cfg.fmt == "csv" else report.to_json(cfg.timing)
        sys.stdout.write(text)
    print(json.dumps(report.summary), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-lattice", type=int, default=MAX_LATTICE)
    common.add_argument("--max-vars", type=int, default=MAX_VARIABLES)
    common.add_argument("-v", "--verbose", action="store_true")

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("--shape", choices=["cycle", "path"], default="cycle")
    inst.add_argument("--weights", type=int_list)
    inst.add_argument("--t", type=int, default=1)

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--ideal", metavar="JSON", help="ideal JSON file")
    src.add_argument("--graph", metavar="JSON", help="graph JSON file")
    src.add_argument("--char", type=int, default=DEFAULT_CHAR)

    ap = argparse.ArgumentParser(prog="edgereg", description="Regularity of powers of weighted edge ideals.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", parents=[common, inst], help="closed-form reg(S/I^t)")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("reg", parents=[common, inst, src], help="regularity from the Betti engine")
    p.add_argument("--table", action="store_true", help="also print the Betti table")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("betti", parents=[common, inst, src], help="graded Betti table")
    p.add_argument("--quotient", action="store_true", help="table of S/I instead of I")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("closure", parents=[common, inst], help="integral closure verdicts")
    p.add_argument("--graph", metavar="JSON")
    p.add_argument("--show", action="store_true", help="print the closure when it is larger")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("polarize", parents=[common, inst, src], help="polarization as ideal JSON")
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("factorize", parents=[common, inst], help="ordered generators of I^t (one heavy edge)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("colon-tail", parents=[common, inst], help="compare (J_i : L_i) with K_i + Q_i")
    p.add_argument("--i", type=int, help="generator index (default: all of C)")
    p.set_defaults(func=cmd_colon_tail)

    p = sub.add_parser("sweep", parents=[common], help="formula-vs-engine verification sweep")
    p.add_argument("--shape", choices=["cycle", "path"], default="cycle")
    p.add_argument("--n", type=int_range, default=[3, 4, 5])
    p.add_argument("--alphabet", type=int_list, default=[1, 2, 3])
    p.add_argument("--t", type=int_range, default=[1, 2])
    p.add_argument("--char", type=int_list, default=[DEFAULT_CHAR, 2])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except TheoremViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
