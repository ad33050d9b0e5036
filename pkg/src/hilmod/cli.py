"""Command-line entry point: ``hilmod <command> [options]``.

Exit status is 0 when every row passes, 1 when a verification fails and 2
on usage or input errors.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from . import kernels, serialize, suites
from .config import sequence_cap
from .errors import FormatError, HilmodError, VerificationError
from .hilbert_module import inner_product, module_norm
from .rational import format_rational
from .report import FORMATS, Report, render

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MAX_WALSH_LEVEL = 8

LOADERS = {
    "rational": serialize.load_rational,
    "interval": serialize.load_interval,
    "partition": serialize.load_partition,
    "element": serialize.load_element,
    "elementary": serialize.load_elementary,
    "functional": serialize.load_functional,
    "coefficients": serialize.load_coefficients,
}

DUMPERS = {
    "rational": serialize.dump_rational,
    "interval": serialize.dump_interval,
    "partition": serialize.dump_partition,
    "element": serialize.dump_element,
    "elementary": serialize.dump_elementary,
    "functional": serialize.dump_functional,
    "coefficients": serialize.dump_coefficients,
}


class UsageError(Exception):
    pass


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _add_output(p):
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--decimals", type=_nonneg_int, default=None, metavar="DIGITS",
                   help="add display-only decimal columns next to every rational")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")


def build_parser():
    parser = argparse.ArgumentParser(prog="hilmod", description="Exact verification of elementary Hilbert C*-module identities.")
    parser.add_argument("--kernels", choices=sorted(kernels.IMPLEMENTATIONS), default=None,
                        help="kernel implementation (default: compiled when available)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-example", help="check the Cauchy / blowup / divergence closed forms for f_1..f_N")
    p.add_argument("--max-level", type=int, required=True, metavar="N")
    _add_output(p)

    p = sub.add_parser("walsh-check", help="Walsh expansion round trip and Parseval on random functions")
    p.add_argument("--level", type=_nonneg_int, required=True, metavar="M")
    p.add_argument("--cases", type=_nonneg_int, default=50, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    _add_output(p)

    p = sub.add_parser("functional-check", help="estimate chain for random positive functionals")
    p.add_argument("--cases", type=_nonneg_int, default=200, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixture", choices=sorted(suites.FIXTURES), default=None,
                   help="run a single named (state, function) pair instead of random cases")
    p.add_argument("--max-mass", default="1", help="upper bound on the random functionals' mass, as p/q")
    _add_output(p)

    p = sub.add_parser("axioms", help="algebra and module axiom suites")
    p.add_argument("--cases", type=_nonneg_int, default=100, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", default=None, metavar="FILE",
                   help="JSON elementary function (or array of them) mixed into the module axioms")
    _add_output(p)

    p = sub.add_parser("roundtrip", help="parse a JSON object and write its canonical form")
    p.add_argument("--kind", choices=sorted(LOADERS), required=True)
    p.add_argument("--input", default="-", metavar="FILE")

    p = sub.add_parser("inner", help="A-valued inner product of two elementary functions")
    p.add_argument("f", metavar="F_FILE")
    p.add_argument("g", metavar="G_FILE")
    return parser


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_fixtures(path):
    if path is None:
        return []
    obj = serialize.loads(_read(path), lambda o: o)
    items = obj if isinstance(obj, list) else [obj]
    return [serialize.load_elementary(o) for o in items]


def _run(args):
    if args.command == "verify-example":
        cap = sequence_cap()
        if not 1 <= args.max_level <= cap:
            raise UsageError(f"--max-level must be between 1 and {cap}")
        return Report("verify-example", {"max_level": args.max_level}, suites.example_rows(args.max_level))
    if args.command == "walsh-check":
        if args.level > MAX_WALSH_LEVEL:
            raise UsageError(f"--level must be at most {MAX_WALSH_LEVEL}")
        params = {"level": args.level, "cases": args.cases, "seed": args.seed}
        return Report("walsh-check", params, suites.walsh_rows(args.level, args.cases, args.seed))
    if args.command == "functional-check":
        max_mass = serialize.load_rational(args.max_mass)
        if max_mass <= 0:
            raise UsageError("--max-mass must be positive")
        params = {"cases": args.cases, "seed": args.seed, "max_mass": format_rational(max_mass)}
        if args.fixture:
            params = {"fixture": args.fixture}
        rows = suites.functional_rows(args.cases, args.seed, args.fixture, Fraction(max_mass))
        return Report("functional-check", params, rows)
    if args.command == "axioms":
        fixtures = _load_fixtures(args.input)
        params = {"cases": args.cases, "seed": args.seed, "fixtures": len(fixtures)}
        return Report("axioms", params, suites.axiom_rows(args.cases, args.seed, fixtures))
    raise AssertionError(args.command)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.kernels:
        kernels.use(args.kernels)
    out = sys.stdout
    try:
        if args.command == "roundtrip":
            obj = serialize.loads(_read(args.input), LOADERS[args.kind])
            out.write(json.dumps(DUMPERS[args.kind](obj), sort_keys=True, indent=2) + "\n")
            return EXIT_OK
        if args.command == "inner":
            f = serialize.loads(_read(args.f), serialize.load_elementary)
            g = serialize.loads(_read(args.g), serialize.load_elementary)
            gram = inner_product(f, g)
            body = {"inner_product": serialize.dump_element(gram), "norm": format_rational(gram.norm())}
            if f == g:
                body["module_norm_sq"] = format_rational(module_norm(f).square)
            out.write(json.dumps(body, sort_keys=True, indent=2) + "\n")
            return EXIT_OK
        start = time.perf_counter()
        report = _run(args)
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    except VerificationError as exc:
        print(f"hilmod {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, FormatError, HilmodError, ValueError, TypeError) as exc:
        print(f"hilmod {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(render(report, args.format, args.decimals, args.timing))
    return EXIT_OK if report.all_passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
