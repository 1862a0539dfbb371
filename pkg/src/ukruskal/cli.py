"""Command-line front end.

Every ``DILATOR`` and ``TERM`` argument is either a path to a file in the
S-expression syntax of :mod:`ukruskal.sexpr` or the expression itself.
Exit status is 0 on success, 1 when a law or verification check fails and
2 for usage, parse and bound errors.
"""

import argparse
import json
import os
import sys
from itertools import product

from . import kernels
from .dilator import TraceError, validate
from .harness import (DEFAULT_SEED, OrderOracle, SuiteConfig, antichain_width, deep_recursion,
                      default_jobs, longest_bad, report_text, run_suite)
from .kruskal import BoundError, TWUniverse, UniverseError, hasse_dot
from .sexpr import ParseError, dilator_to_sexpr, parse_dilator, parse_theta_term, parse_tw_term
from .theta import OrderError, ThetaSystem
from .wd import NotMonotoneError, WDDilator, nu_canonical, theta_to_tw

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    """Reported on stderr with exit status 2."""


# -- helpers ------------------------------------------------------------------------

def _text_arg(arg):
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    if arg.lstrip().startswith("(") or arg.strip() in ("id", "id-l"):
        return arg
    raise UsageError(f"{arg}: no such file, and not an S-expression")


def _dilator(arg):
    return parse_dilator(_text_arg(arg))


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def _order_for(args, W):
    order = args.order or ("theta" if W.flavor == "LO" else "tw")
    if order == "tw" and W.flavor != "PO":
        raise UsageError("the tw order needs a PO-dilator; use --order theta or wrap with (wd ...)")
    if order == "theta" and W.flavor != "LO":
        raise UsageError("the theta order needs an LO-dilator")
    return order


def _empty_base(W, bound):
    return not any(W.trace_feasible(0, p) for p in range(1, max(bound, 1) + 1))


def _universe(args, W):
    """``(order, terms, leq)`` for the enumerated universe of ``W``."""
    order = _order_for(args, W)
    if _empty_base(W, args.bound):
        if order == "tw":
            _warn(f"W(0) has no elements up to size {args.bound}, so the fixed point is empty; "
                  f"try (one-plus {dilator_to_sexpr(W)})")
        else:
            _warn(f"D(0) has no elements up to size {args.bound}, so theta(D) is empty; "
                  f"try (sum-lex (const-l 1) {dilator_to_sexpr(W)})")
    if order == "tw":
        U = TWUniverse(W)
        return order, U.enumerate(args.bound, cap=args.max_terms), U.leq
    S = ThetaSystem(W)
    return order, S.enumerate(args.bound, cap=args.max_terms), S.le


# -- subcommands --------------------------------------------------------------------

def cmd_validate(args):
    W = _dilator(args.dilator)
    rep = validate(W, args.max_poset_size, args.max_elem_size)
    _emit(args, rep.to_dict(), rep.to_text())
    return OK if rep.passed else FAILED


def cmd_compare(args):
    W = _dilator(args.dilator)
    order = _order_for(args, W)
    t1, t2 = _text_arg(args.term1), _text_arg(args.term2)
    if order == "tw":
        U = TWUniverse(W)
        s, t = parse_tw_term(t1, U), parse_tw_term(t2, U)
        le, ge = U.leq(s, t), U.leq(t, s)
        rel = "equal" if s == t else "<=" if le else ">=" if ge else "incomparable"
    else:
        S = ThetaSystem(W)
        s, t = parse_theta_term(t1, S), parse_theta_term(t2, S)
        rel = {-1: "<", 0: "=", 1: ">"}[S.compare(s, t)]
    _emit(args, {"order": order, "left": s.sexpr, "right": t.sexpr, "relation": rel},
          f"{s.sexpr} {rel} {t.sexpr}")
    return OK


def cmd_embed(args):
    D = _dilator(args.dilator)
    if D.flavor != "LO":
        raise UsageError("embed needs an LO-dilator")
    try:
        nu = nu_canonical(D, (args.max_poset_size, args.max_elem_size))
    except NotMonotoneError as err:
        print(f"monotonicity check failed: {err}", file=sys.stderr)
        return FAILED
    S = ThetaSystem(D)
    if _empty_base(D, args.bound):
        _warn(f"D(0) has no elements, so theta(D) is empty; "
              f"try (sum-lex (const-l 1) {dilator_to_sexpr(D)})")
    terms = S.enumerate(args.bound, cap=args.max_terms)
    U = TWUniverse(WDDilator(D))
    f = theta_to_tw(S, U, nu)
    images = [f(t) for t in terms]
    W = U.W
    invalid = [y.sexpr for y in images
               if not (W.is_element(y.base.canon, y.payload)
                       and W.support(y.payload) == frozenset(y.base.canon.elems))]
    violations = [(s.sexpr, t.sexpr) for (s, x), (t, y) in product(zip(terms, images), repeat=2)
                  if U.leq(x, y) and not S.le(s, t)]
    injective = len(set(images)) == len(images)
    result = {
        "dilator": dilator_to_sexpr(D), "bound": args.bound, "terms": len(terms),
        "pairs": len(terms) ** 2, "invalid_images": invalid, "violations": violations,
        "injective": injective, "passed": not invalid and not violations and injective,
    }
    lines = [f"theta(D) terms up to size {args.bound}: {len(terms)}",
             f"pairs checked: {len(terms) ** 2}",
             f"invalid images: {len(invalid)}",
             f"order violations: {len(violations)}",
             f"injective: {'yes' if injective else 'no'}"]
    if invalid:
        lines.append(f"first invalid image: {invalid[0]}")
    if violations:
        lines.append(f"first violation: {violations[0][0]} vs {violations[0][1]}")
    _emit(args, result, "\n".join(lines))
    return OK if result["passed"] else FAILED


def cmd_enumerate(args):
    W = _dilator(args.dilator)
    order, terms, _ = _universe(args, W)
    rows = [{"sexpr": t.sexpr, "size": t.size,
             "height": getattr(t, "height", None), "code": str(t.code)} for t in terms]
    text = "\n".join(f"{r['size']:3d}  {r['sexpr']}" for r in rows)
    _emit(args, {"order": order, "bound": args.bound, "count": len(rows), "terms": rows},
          text + ("\n" if rows else "") + f"{len(rows)} term(s)")
    return OK


def cmd_badseq(args):
    W = _dilator(args.dilator)
    order, terms, leq = _universe(args, W)
    rep = longest_bad(OrderOracle(tuple(terms), leq), args.cap)
    width = antichain_width(terms, leq)
    result = {"order": order, "bound": args.bound, "universe": len(terms), "cap": args.cap,
              "longest": rep.longest, "exhaustive": rep.exhaustive,
              "antichain_width": width, "witness": [t.sexpr for t in rep.witness]}
    lines = [f"universe: {len(terms)} terms up to size {args.bound}",
             f"longest bad sequence: {rep.longest}"
             + ("" if rep.exhaustive else f" (search stopped at cap {args.cap})"),
             f"largest antichain: {width}", "witness:"]
    lines += [f"  {t.sexpr}" for t in rep.witness]
    _emit(args, result, "\n".join(lines))
    return OK


def cmd_dot(args):
    W = _dilator(args.dilator)
    order, terms, leq = _universe(args, W)
    dot = hasse_dot(terms, leq, "TW" if order == "tw" else "theta")
    if args.format == "json":
        print(json.dumps({"order": order, "bound": args.bound, "dot": dot}, indent=2))
    else:
        print(dot)
    return OK


def cmd_suite(args):
    cfg = SuiteConfig(seed=args.seed, random_pairs=args.random_pairs,
                      jobs=args.jobs or default_jobs(), only=tuple(args.only or ()))
    report = run_suite(cfg)
    _emit(args, report, report_text(report))
    return OK if report["failures"] == 0 else FAILED


# -- parser -------------------------------------------------------------------------

def _nat(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return n


def build_parser():
    p = argparse.ArgumentParser(prog="ukruskal", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s (kernels: {kernels.BACKEND})")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default=formats[0])

    def bounds(sp, poset=3, elem=4):
        sp.add_argument("--max-poset-size", type=_nat, default=poset)
        sp.add_argument("--max-elem-size", type=_nat, default=elem)

    def universe(sp, bound=6):
        sp.add_argument("dilator", help="dilator file or S-expression")
        sp.add_argument("--bound", type=_nat, default=bound, help="maximal term size")
        sp.add_argument("--order", choices=("tw", "theta"),
                        help="tw for PO-dilators, theta for LO-dilators (default by flavor)")
        sp.add_argument("--max-terms", type=_nat, default=5000,
                        help="refuse universes with more terms than this")

    sp = sub.add_parser("validate", help="check the dilator laws exhaustively")
    sp.add_argument("dilator", help="dilator file or S-expression")
    bounds(sp)
    common(sp)
    sp.set_defaults(run=cmd_validate)

    sp = sub.add_parser("compare", help="compare two terms")
    sp.add_argument("dilator", help="dilator file or S-expression")
    sp.add_argument("term1")
    sp.add_argument("term2")
    sp.add_argument("--order", choices=("tw", "theta"))
    common(sp)
    sp.set_defaults(run=cmd_compare)

    sp = sub.add_parser("embed", help="map theta(D) into the fixed point of W_D and check it")
    sp.add_argument("dilator", help="LO-dilator file or S-expression")
    sp.add_argument("--bound", type=_nat, default=10)
    sp.add_argument("--max-terms", type=_nat, default=5000)
    bounds(sp, 4, 4)
    common(sp)
    sp.set_defaults(run=cmd_embed)

    sp = sub.add_parser("enumerate", help="list all terms up to a size bound")
    universe(sp)
    common(sp)
    sp.set_defaults(run=cmd_enumerate)

    sp = sub.add_parser("badseq", help="search a longest bad sequence in an enumerated universe")
    universe(sp)
    sp.add_argument("--cap", type=_nat, default=10_000, help="stop once a bad sequence this long is found")
    common(sp)
    sp.set_defaults(run=cmd_badseq)

    sp = sub.add_parser("dot", help="Hasse diagram of an enumerated universe")
    universe(sp, 4)
    common(sp, ("dot", "json"))
    sp.set_defaults(run=cmd_dot)

    sp = sub.add_parser("suite", help="run the acceptance suite")
    sp.add_argument("--seed", type=_nat, default=DEFAULT_SEED)
    sp.add_argument("--random-pairs", type=_nat, default=10_000)
    sp.add_argument("--jobs", type=_nat, default=0,
                    help="worker processes (default: UKRUSKAL_JOBS or the CPU count)")
    sp.add_argument("--only", type=_nat, nargs="+", metavar="K", help="criterion numbers")
    common(sp)
    sp.set_defaults(run=cmd_suite)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with deep_recursion():
            return args.run(args)
    except (UsageError, ParseError, TraceError, UniverseError, OrderError, BoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
