"""limitram command line: validate, limits, ramification, example."""

import argparse
import os
import sys

from . import catalog
from .errors import (IdentityCheckError, IterationBoundExceeded, LimitramError, ParseError,
                     PrecisionExhausted, PreconditionError, ValidationError)
from .fibre import validate_family
from .io import dumps, family_from_json, load_family
from .lattice import associated_extensions, connecting_matrix
from .pipeline import DEFAULT_RETRIES, ENV_PRECISION, env_precision, with_retries
from .ramification import limit_divisor
from .report import limits_json, limits_table, report_json, report_table

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_PRECISION = 4
EXIT_IO = 5


class InputError(Exception):
    pass


def _precision(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 8:
        raise argparse.ArgumentTypeError("precision must be at least 8")
    return n


def _retries(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("retries must be nonnegative")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=None,
                        help=f"jet precision N (default: ${ENV_PRECISION} or 8(r+1)d+16)")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--retries", type=_retries, default=DEFAULT_RETRIES,
                        help="precision doublings before giving up")

    parser = argparse.ArgumentParser(
        prog="limitram",
        description="Limit linear systems and limit ramification divisors of planar "
                    "degenerations to nodal curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    src = ("family JSON file, '-' for stdin, or a built-in example such as "
           "'case11' or 'case11:1,2'")
    for name, text in (("validate", "check a family description"),
                       ("limits", "associated extensions and connecting numbers"),
                       ("ramification", "limit ramification divisor and identity checks")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", help=src)
    p = sub.add_parser("example", parents=[common], help="print a built-in family as JSON")
    p.add_argument("name", help=", ".join(catalog.EXAMPLES))
    p.add_argument("params", nargs="*", help="rational parameters (case11: c1 c2)")
    return parser


def _read_input(spec, precision):
    if spec == "-":
        return load_family(sys.stdin.read(), precision)
    if os.path.exists(spec):
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror}") from None
        return load_family(text, precision)
    name, _, params = spec.partition(":")
    if name in catalog.EXAMPLES:
        args = [p for p in params.split(",") if p] if params else []
        try:
            data = catalog.example(name, *args)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc)) from None
        return family_from_json(data, precision)
    raise InputError(f"no such file or built-in example: {spec}")


def _emit(text, out):
    out.write(text)


def _validate(model, out, fmt):
    rep = validate_family(model)
    if fmt == "json":
        _emit(dumps({"valid": rep.valid, "errors": rep.errors, "warnings": rep.warnings}), out)
    else:
        lines = [f"valid: {'yes' if rep.valid else 'no'}"]
        lines += [f"error: {e}" for e in rep.errors]
        lines += [f"warning: {w}" for w in rep.warnings]
        _emit("\n".join(lines) + "\n", out)
    return rep


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        precision = args.precision if args.precision is not None else env_precision()
    except ValueError as exc:
        err.write(f"limitram: {exc}\n")
        return EXIT_PARSE
    try:
        if args.command == "example":
            try:
                data = catalog.example(args.name, *args.params)
            except KeyError as exc:
                err.write(f"limitram: {exc.args[0]}\n")
                return EXIT_PARSE
            except (ValueError, ZeroDivisionError) as exc:
                err.write(f"limitram: {exc}\n")
                return EXIT_PARSE
            _emit(dumps(data), out)
            return EXIT_OK

        model = _read_input(args.input, precision)
        if args.command == "validate":
            rep = _validate(model, out, args.format)
            return EXIT_OK if rep.valid else EXIT_INVALID

        rep = validate_family(model)
        for w in rep.warnings:
            err.write(f"limitram: warning: {w}\n")
        rep.raise_if_invalid()

        if args.command == "limits":
            def compute(m):
                exts = associated_extensions(m)
                return limits_json(m, exts, connecting_matrix(exts))
            data, _ = with_retries(compute, model, args.retries)
            _emit(dumps(data) if args.format == "json" else limits_table(data), out)
            return EXIT_OK

        try:
            report, _ = with_retries(limit_divisor, model, args.retries)
        except IdentityCheckError as exc:
            if exc.report is not None:
                data = report_json(exc.report)
                _emit(dumps(data) if args.format == "json" else report_table(data), out)
            err.write(f"limitram: {exc}\n")
            return EXIT_IDENTITY
        data = report_json(report)
        _emit(dumps(data) if args.format == "json" else report_table(data), out)
        return EXIT_OK
    except ParseError as exc:
        err.write(f"limitram: parse error: {exc}\n")
        return EXIT_PARSE
    except ValidationError as exc:
        err.write(f"limitram: invalid family: {exc}\n")
        return EXIT_INVALID
    except PrecisionExhausted as exc:
        err.write(f"limitram: precision exhausted after {args.retries} retries: {exc}\n")
        return EXIT_PRECISION
    except InputError as exc:
        err.write(f"limitram: {exc}\n")
        return EXIT_IO
    except (PreconditionError, IterationBoundExceeded) as exc:
        err.write(f"limitram: {exc}\n")
        return EXIT_INVALID
    except LimitramError as exc:
        err.write(f"limitram: {exc}\n")
        return EXIT_IDENTITY


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
