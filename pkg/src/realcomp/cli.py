"""Command line front end: ``realcomp <command> ...``.

Exit codes: 0 success, 1 usage / input / dimension error, 2 numerical
precondition failure, 3 a ``check-*`` command found a violation.
"""
import argparse
import json
import sys

import numpy as np

from .composition import compose_v1, compose_v2
from .errors import NotDiagonalizable, NumericalPreconditionError, RealizationError
from .linalg import DEFAULT_TOL
from .networks import flatten, network_from_dict
from .realization import evaluate, inverse_realization, product_realization
from .sampling import rhp_grid
from .serialization import DocumentError, dumps, load
from .spectral import (kalman_controllable, kalman_observable, mcmillan_degree,
                       pbh_controllable, pbh_observable)
from .stieltjes import (canonical_matrix, is_positive_sampled, is_stieltjes_canonical,
                        is_stieltjes_sampled, kyp_residual)

__all__ = ["main", "EXIT_OK", "EXIT_USAGE", "EXIT_NUMERICAL", "EXIT_CHECK_FAILED"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_CHECK_FAILED = 3

COMPOSE1_CASES = ("scalar-inner", "I", "IIa", "IIb", "III", "scalar-outer")

# plain-language statement of each invertibility precondition
_PRECONDITIONS = {
    "D": "the feedthrough matrix D must be invertible",
    "D_R - A_L": "D_R - A_L must be nonsingular for the pencil-argument composition",
    "d_R I - A_L": "d_R I - A_L must be nonsingular for the scalar-inner composition",
    "delta": "D_R - a_j I must be nonsingular for every eigenvalue a_j of A_L",
    "I (x) D_R - A_L (x) I": "I (x) D_R - A_L (x) I must be nonsingular for the scalar-outer composition",
    "zI - A": "the evaluation point must not be an eigenvalue of A",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--tol", type=float, default=default(DEFAULT_TOL),
                        help="relative tolerance for rank and singularity tests (default 1e-9)")
    parser.add_argument("--seed", type=int, default=default(0),
                        help="seed for sample-point generation (default 0)")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="machine-readable report")


def build_parser():
    parser = _Parser(prog="realcomp",
                     description="State-space realization algebra on JSON documents.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add("invert", "realization of F(z)^-1")
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("mul", "realization of the product F1(z) F2(z)")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")

    p = add("compose1", "F_L evaluated with F_R(z) in place of z")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--case", choices=COMPOSE1_CASES, required=True)
    p.add_argument("-o", "--output")

    p = add("compose2", "D_L + C_L (F_R(z) - A_L)^-1 B_L")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")

    p = add("eval", "evaluate F at a complex point")
    p.add_argument("input")
    p.add_argument("--z", required=True, help="RE,IM (write --z=-1,0 for negative values)")

    p = add("minimal", "controllability, observability and McMillan degree")
    p.add_argument("input")

    p = add("check-pr", "sampled positivity on the right half plane")
    p.add_argument("input")
    p.add_argument("--samples", type=int, default=50)

    p = add("check-stieltjes", "canonical Stieltjes certificate and sampled check")
    p.add_argument("input")
    p.add_argument("--samples", type=int, default=50)

    p = add("circuit", "flatten a network expression to a realization")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    return parser


def _parse_point(text):
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise _UsageError(f"--z expects RE,IM, got {text!r}")
    try:
        vals = [float(v) for v in parts]
    except ValueError:
        raise _UsageError(f"--z expects RE,IM, got {text!r}") from None
    if not all(np.isfinite(vals)):
        raise _UsageError("--z must be finite")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _write(R, path, out):
    text = dumps(R)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _fmt_complex(v):
    return f"{v.real:.17g}{'+' if v.imag >= 0 else '-'}{abs(v.imag):.17g}j"


def _matrix_json(M):
    return [[[float(v.real), float(v.imag)] for v in row] for row in M]


def _report(args, out, fields):
    if args.json:
        out.write(json.dumps(fields, indent=1) + "\n")
        return
    for key, value in fields.items():
        out.write(f"{key}: {value}\n")


def _cmd_transform(args, out):
    if args.command == "invert":
        R = inverse_realization(load(args.input), args.tol)
    elif args.command == "mul":
        R = product_realization(load(args.left), load(args.right))
    elif args.command == "compose1":
        R = compose_v1(load(args.left), load(args.right), case=args.case, tol=args.tol)
    elif args.command == "compose2":
        R = compose_v2(load(args.left), load(args.right), args.tol)
    else:
        with open(args.input, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DocumentError(f"invalid JSON: {exc}") from None
        R = flatten(network_from_dict(doc), args.tol)
    _write(R, args.output, out)
    return EXIT_OK


def _cmd_eval(args, out):
    z = _parse_point(args.z)
    F = evaluate(load(args.input), z, args.tol)
    if args.json:
        out.write(json.dumps({"z": [z.real, z.imag], "value": _matrix_json(F)}) + "\n")
    else:
        for row in F:
            out.write(" ".join(_fmt_complex(v) for v in row) + "\n")
    return EXIT_OK


def _cmd_minimal(args, out):
    R = load(args.input)
    fields = {"n": R.n}
    try:
        fields["pbh_controllable"] = pbh_controllable(R.A, R.B, args.tol)
        fields["pbh_observable"] = pbh_observable(R.A, R.C, args.tol)
    except NotDiagonalizable:
        fields["pbh_controllable"] = None
        fields["pbh_observable"] = None
    fields["kalman_controllable"] = kalman_controllable(R.A, R.B, args.tol)
    fields["kalman_observable"] = kalman_observable(R.A, R.C, args.tol)
    degree = mcmillan_degree(R, args.tol)
    fields["mcmillan_degree"] = degree
    fields["minimal"] = degree == R.n
    _report(args, out, fields)
    return EXIT_OK


def _samples(args):
    if args.samples < 1:
        raise _UsageError("--samples must be positive")
    return rhp_grid(args.samples, seed=args.seed)


def _cmd_check_pr(args, out):
    R = load(args.input)
    ok = is_positive_sampled(R, _samples(args), args.tol)
    _report(args, out, {"samples": args.samples, "seed": args.seed,
                        "positive_sampled": ok, "verdict": "pass" if ok else "fail"})
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_check_stieltjes(args, out):
    R = load(args.input)
    square = R.p == R.m
    certified = square and is_stieltjes_canonical(R, args.tol)
    fields = {"n": R.n, "p": R.p, "canonical": certified}
    if square:
        fields["kyp_residual"] = float(kyp_residual(R))
        fields["canonical_min_eigenvalue"] = (
            float(np.linalg.eigvalsh((canonical_matrix(R) + canonical_matrix(R).conj().T) / 2)[0])
            if R.n + R.p else 0.0)
        fields["p_exceeds_n"] = R.p > R.n
    sampled = square and is_stieltjes_sampled(R, _samples(args), args.tol)
    fields["stieltjes_sampled"] = sampled
    fields["evidence"] = "certified" if certified else ("sampled only" if sampled else "none")
    fields["verdict"] = "pass" if sampled else "fail"
    _report(args, out, fields)
    return EXIT_OK if sampled else EXIT_CHECK_FAILED


_COMMANDS = {
    "invert": _cmd_transform,
    "mul": _cmd_transform,
    "compose1": _cmd_transform,
    "compose2": _cmd_transform,
    "circuit": _cmd_transform,
    "eval": _cmd_eval,
    "minimal": _cmd_minimal,
    "check-pr": _cmd_check_pr,
    "check-stieltjes": _cmd_check_stieltjes,
}


def _precondition_message(exc):
    what = getattr(exc, "what", None)
    rule = _PRECONDITIONS.get(what)
    detail = str(exc)
    return f"precondition violated: {rule} ({detail})" if rule else f"precondition violated: {detail}"


def main(argv=None, stdout=None, stderr=None):
    """Run the command line interface and return the exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NumericalPreconditionError as exc:
        err.write(f"error: {_precondition_message(exc)}\n")
        return EXIT_NUMERICAL
    except (RealizationError, DocumentError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
