"""Command-line entry point.

Exit codes: 0 for a passing or informational report, 1 for a failed
verification, 2 for unusable input.
"""

import argparse
import sys
import warnings

from combalg import commands
from combalg.field import QQ, FieldError, parse_field
from combalg.parse import ParseError, parse_ideal_file
from combalg.poly import is_squarefree
from combalg.simplicial import ComplexError, SimplicialComplex

BUILTINS = {
    "hollow_triangle": "hollow_triangle.json",
    "rp2": "rp2.json",
    "two_edges": "two_edges.json",
    "ex_main_delta": "ex_main_delta.json",
    "ex_main": "ex_main.ideal",
    "elliptic": "elliptic.ideal",
}


class InputError(Exception):
    pass


def _read_source(args):
    if args.builtin:
        if args.builtin not in BUILTINS:
            raise InputError(f"unknown builtin {args.builtin!r}; choose from {sorted(BUILTINS)}")
        name = BUILTINS[args.builtin]
        return name, commands.load_builtin(name)
    if not args.file:
        raise InputError("give --file or --builtin")
    try:
        with open(args.file, encoding="utf-8") as fh:
            return args.file, fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _complex(args):
    _, text = _read_source(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return SimplicialComplex.from_json(text)


def _ideal(args):
    return parse_ideal_file(_read_source(args)[1])


def _field(text):
    try:
        return parse_field(text)
    except FieldError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _run_generic(args):
    field = args.field
    name = args.command
    if name in ("homology", "depth", "nerve"):
        delta = _complex(args)
        return getattr(commands, f"cmd_{name}")(delta, field)
    if name == "lyubeznik":
        source, text = _read_source(args)
        if source.endswith(".json"):
            delta = SimplicialComplex.from_json(text)
            from combalg.simplicial import to_stanley_reisner
            from combalg.poly import PolynomialRing

            ring = PolynomialRing(tuple(delta.vertices))
            gens = to_stanley_reisner(delta, ring)
        else:
            ring, _, polys = parse_ideal_file(text)
            gens = []
            for p in polys:
                if not p.is_monomial() or not is_squarefree(p.monomials()[0]):
                    raise InputError(f"{p} is not a square-free monomial")
                gens.append(p.monomials()[0])
        return commands.cmd_lyubeznik(gens, ring, field)
    ring, order, gens = _ideal(args)
    return getattr(commands, f"cmd_{name}")(ring, order, gens)


def build_parser():
    p = argparse.ArgumentParser(prog="combalg", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["json", "text"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="end-to-end verification suites")
    vsub = verify.add_subparsers(dest="target", required=True)
    ex = vsub.add_parser("ex-main", help="the Segre counterexample pipeline")
    ex.add_argument("--field", type=_field, default=QQ)
    seg = vsub.add_parser("segre", help="randomized Segre initial-ideal oracle suite")
    seg.add_argument("--seed", type=int, default=42)
    seg.add_argument("--trials", type=int, default=25)
    seg.add_argument("--a", "--max-a", dest="max_a", type=int, default=2)
    seg.add_argument("--b", "--max-b", dest="max_b", type=int, default=2)

    sub.add_parser("quasi-check", help="heights in the Veronese slice k[J_3]")

    for name, what in [
        ("homology", "reduced Betti numbers of a complex file"),
        ("depth", "depth and Cohen-Macaulayness of k[Delta]"),
        ("nerve", "nerve of the facet cover"),
        ("lyubeznik", "Lyubeznik complex of a square-free monomial ideal or complex"),
        ("groebner", "reduced Groebner basis of an ideal file"),
        ("initial", "minimal generators of the initial ideal"),
        ("weight", "weight vector certifying the initial ideal"),
        ("homogenize", "weight homogenization of the reduced basis"),
    ]:
        sp = sub.add_parser(name, help=what)
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--file")
        src.add_argument("--builtin", help=f"one of: {', '.join(sorted(BUILTINS))}")
        sp.add_argument("--field", type=_field, default=QQ)
    return p


def run(argv=None):
    """Parse ``argv`` and return ``(report, exit_code)``; report is None on input error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, 0 if exc.code == 0 else 2
    try:
        if args.command == "verify" and args.target == "ex-main":
            report = commands.cmd_verify_ex_main(args.field)
        elif args.command == "verify":
            report = commands.cmd_verify_segre(args.seed, args.trials, args.max_a, args.max_b)
        elif args.command == "quasi-check":
            report = commands.cmd_quasi_check()
        else:
            report = _run_generic(args)
    except (InputError, ParseError, ComplexError, FieldError, KeyError, ValueError) as exc:
        print(f"combalg: error: {exc}", file=sys.stderr)
        return None, 2
    out = report.to_json() if args.format == "json" else report.to_text()
    print(out)
    return report, report.exit_code


def main(argv=None):
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
