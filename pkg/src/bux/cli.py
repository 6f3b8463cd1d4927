"""The ``bux`` command line.

Exit codes: 0 success (exact), 1 input error, 2 budget-limited result,
3 verification failure.  ``BUX_BUDGET`` sets the default node budget.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .budget import Budget, SearchExhausted, default_budget
from .complex import join, link
from .gf2 import from_bits, to_bits
from .goodpairs import (
    GoodPair,
    TransformError,
    double_shift,
    is_good_pair,
    push_into_hyperplane,
    shadow,
    t_mix,
    t_one,
    verify_complete_join_additivity,
)
from .invariants import (
    first_bad_facet_gf2,
    first_bad_facet_int,
    gamma_q_bounds,
    invariant_report,
    lift_char_map,
    search_char_map_gf2,
    search_char_map_int,
)
from .io import FormatError, dump_certificate, dump_complex, dump_report, load_certificate, load_complex
from .universal import MAX_MATERIALIZE, real_universal_skeleton

OK, INPUT_ERROR, BUDGET_LIMITED, VERIFY_FAILED = 0, 1, 2, 3


def _out(text, path=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _bit_list(text):
    out = [x.strip() for x in text.split(",") if x.strip()]
    for x in out:
        if set(x) - {"0", "1"}:
            raise argparse.ArgumentTypeError(f"not a 0/1 string: {x!r}")
    return out


# --- subcommands ---------------------------------------------------------------------


def cmd_invariants(args):
    cf = load_complex(args.file)
    budget = args.budget or default_budget()
    rep = invariant_report(cf.complex, Budget(budget), args.max_l, args.q_list, args.threads)
    _out(dump_report(rep, cf.name or args.file, budget), args.output)
    return OK if rep.exact else BUDGET_LIMITED


def cmd_verify(args):
    K = load_complex(args.complex).complex
    cert = load_certificate(args.certificate)
    if cert.complex != K:
        raise FormatError("certificate was written for a different complex", args.certificate)
    field = args.field or cert.field
    if field != cert.field and not (field == "int" and args.lift):
        raise FormatError(
            f"certificate holds {cert.field} vectors; checking them as {field} needs --lift",
            args.certificate,
        )
    c = cert.char_map()
    if field == "int" and cert.field == "gf2":
        c = lift_char_map(c)
    try:
        bad = first_bad_facet_gf2(c) if field == "gf2" else first_bad_facet_int(c)
    except ValueError as e:
        raise FormatError(str(e), args.certificate) from None
    if bad is None:
        print(f"valid {field} characteristic map at l = {c.l} on {len(K.facets)} facets")
        return OK
    if field == "gf2":
        shown = [to_bits(c.images[v], c.l) for v in bad]
    else:
        shown = [list(c.images[v]) for v in bad]
    print(f"invalid: facet {list(bad)} maps to the dependent set {shown}")
    return VERIFY_FAILED


def cmd_universal(args):
    if not 1 <= args.l <= MAX_MATERIALIZE:
        raise FormatError(f"--l must be between 1 and {MAX_MATERIALIZE}")
    try:
        U = real_universal_skeleton(args.l, args.dim)
    except ValueError as e:
        raise FormatError(str(e)) from None
    vectors = [to_bits(i + 1, args.l) for i in range(U.m)]
    if args.format == "table":
        lines = [f"# RU_{args.l}" + (f", {args.dim}-skeleton" if args.dim is not None else "")]
        lines += [f"# {i} = {v}" for i, v in enumerate(vectors)]
        lines += [" ".join(map(str, f)) for f in sorted(U.facets)]
        _out("\n".join(lines) + "\n", args.output)
    else:
        name = f"RU_{args.l}" + (f"^({args.dim})" if args.dim is not None else "")
        _out(dump_complex(U, name, vertex_vectors=vectors), args.output)
    return OK


def cmd_charmap(args):
    cf = load_complex(args.file)
    budget = Budget(args.budget or default_budget())
    try:
        if args.field == "gf2":
            c = search_char_map_gf2(cf.complex, args.l, budget)
        else:
            c = search_char_map_int(cf.complex, args.l, args.height, budget)
    except SearchExhausted:
        print(f"budget of {budget.limit} nodes exhausted at l = {args.l}", file=sys.stderr)
        return BUDGET_LIMITED
    if c is None:
        extra = f" with coordinates in [-{args.height}, {args.height}]" if args.field == "int" else ""
        print(f"no {args.field} characteristic map at l = {args.l}{extra}", file=sys.stderr)
        return VERIFY_FAILED
    _out(dump_certificate(c, name=cf.name), args.output)
    return OK


def cmd_gamma(args):
    K = load_complex(args.file).complex
    budget = Budget(args.budget or default_budget())
    b = gamma_q_bounds(K, args.q, budget)
    if b.exact:
        print(f"gamma_{args.q} = {b.lower}")
        return OK
    print(f"{b.lower} <= gamma_{args.q} <= {b.upper}")
    return BUDGET_LIMITED


def cmd_join(args):
    A, B = load_complex(args.a), load_complex(args.b)
    name = f"{A.name or 'A'} * {B.name or 'B'}"
    _out(dump_complex(join(A.complex, B.complex), name), args.output)
    return OK


def cmd_link(args):
    cf = load_complex(args.file)
    try:
        L, index = link(cf.complex, args.simplex)
    except ValueError as e:
        raise FormatError(str(e)) from None
    if L.m == 0:
        print("link is empty (the simplex is a facet)")
        return OK
    name = f"link of {args.simplex} in {cf.name or args.file}"
    _out(dump_complex(L, name, vertex_index=list(index)), args.output)
    return OK


def _pair(args):
    strings = (args.S or []) + (args.T or [])
    lengths = {len(x) for x in strings}
    if args.l:
        l = args.l
    elif len(lengths) == 1:
        l = lengths.pop()
    else:
        raise FormatError("give --l or 0/1 strings of one common length")
    if any(len(x) > l for x in strings):
        raise FormatError(f"vectors longer than l = {l}")
    return GoodPair(l, [from_bits(x) for x in args.S or []], [from_bits(x) for x in args.T or []])


def _show_pair(P):
    print("S = " + ", ".join(to_bits(v, P.l) for v in P.S))
    print("T = " + ", ".join(to_bits(v, P.l) for v in P.T))


def cmd_goodpair(args):
    if args.op == "additivity":
        rep = verify_complete_join_additivity(args.p, args.q, Budget(args.budget or default_budget()))
        print(f"r_R(K{args.p} * K{args.q}) = {rep.level}: witness at {rep.level}, "
              f"{'none' if rep.refuted else 'found'} at {rep.level - 1}")
        return OK if rep.ok else VERIFY_FAILED
    P = _pair(args)
    if args.op == "check":
        good = is_good_pair(P)
        if good:
            print(f"good pair: |shadow S| = {len(shadow(P.S))}, |shadow T| = {len(shadow(P.T))}")
        else:
            print("not a good pair")
        return OK if good else VERIFY_FAILED
    if not is_good_pair(P):
        raise FormatError("input is not a good pair")
    idx = args.index or []
    try:
        if args.op == "mix":
            Q = t_mix(P, *idx[:2])
        elif args.op == "one":
            Q = t_one(P, args.side, idx[0])
        elif args.op == "shift":
            Q = double_shift(P, *idx[:4])
        else:
            res = push_into_hyperplane(P, args.coordinate)
            Q = res.pair
            print(f"{res.flagged} lies in the hyperplane v[{args.coordinate}] = 0 "
                  f"after {res.loops} moves")
    except TransformError as e:
        print(f"transformation broke goodness: {e}")
        return VERIFY_FAILED
    except (IndexError, TypeError, ValueError) as e:
        raise FormatError(str(e)) from None
    _show_pair(Q)
    return OK


def cmd_demo(args):
    from .demos import DEMOS

    budget = Budget(args.budget or default_budget())
    res = DEMOS[args.name](budget)
    print(res.render())
    return OK if res.ok else VERIFY_FAILED


# --- parser --------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="bux", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"bux {__version__}")
    p.add_argument("--threads", type=int, default=1, help="worker threads for independent sub-computations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, output=True):
        sp.add_argument("--budget", type=int, help="node budget (default: BUX_BUDGET or 5000000)")
        if output:
            sp.add_argument("-o", "--output", help="write the result here instead of stdout")

    sp = sub.add_parser("invariants", help="full invariant report of a complex")
    sp.add_argument("file")
    sp.add_argument("--max-l", type=int, help="highest level tried for r_R")
    sp.add_argument("--q-list", type=_int_list, help="q values for gamma_q, e.g. 2,3")
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("verify", help="check a certificate against a complex")
    sp.add_argument("complex")
    sp.add_argument("certificate")
    sp.add_argument("--field", choices=("gf2", "int"))
    sp.add_argument("--lift", action="store_true", help="lift gf2 vectors to 0/1 integer vectors")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("universal", help="emit RU_l or one of its skeleta")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--format", choices=("json", "table"), default="json")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_universal)

    sp = sub.add_parser("charmap", help="search for a characteristic map at a given level")
    sp.add_argument("file")
    sp.add_argument("--field", choices=("gf2", "int"), default="gf2")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--height", type=int, default=1, help="coordinate bound for --field int")
    common(sp)
    sp.set_defaults(func=cmd_charmap)

    sp = sub.add_parser("gamma", help="q-regular chromatic number")
    sp.add_argument("file")
    sp.add_argument("-q", type=int, default=1)
    common(sp, output=False)
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("join", help="join of two complexes")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_join)

    sp = sub.add_parser("link", help="link of a simplex")
    sp.add_argument("file")
    sp.add_argument("--simplex", type=_int_list, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_link)

    sp = sub.add_parser("goodpair", help="good pairs and their transformations")
    sp.add_argument("op", choices=("check", "mix", "one", "shift", "push", "additivity"))
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--S", type=_bit_list, help="comma-separated 0/1 strings")
    sp.add_argument("--T", type=_bit_list, help="comma-separated 0/1 strings")
    sp.add_argument("--index", type=_int_list, help="0-based indices: mix a,g; one a; shift a,b,g,d")
    sp.add_argument("--side", type=int, choices=(1, 2), default=1)
    sp.add_argument("--coordinate", type=int, default=0)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--q", type=int, default=2)
    common(sp, output=False)
    sp.set_defaults(func=cmd_goodpair)

    sp = sub.add_parser("demo", help="run a demonstration pipeline")
    sp.add_argument("name", choices=("counterexample", "graph-formula", "join-additivity", "spreads"))
    common(sp, output=False)
    sp.set_defaults(func=cmd_demo)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except SearchExhausted as e:
        print(f"budget-limited: {e}", file=sys.stderr)
        return BUDGET_LIMITED


if __name__ == "__main__":
    sys.exit(main())
