"""Command line front end over the verification suites.

Each subcommand collects parameters, runs one registered suite, and prints
the report as JSON (default) or a markdown table via ``--format md``. The
exit code is 0 when every check passed, 1 when any check failed, and 2 for
usage problems, unknown suites, unreadable input files, or parameter
values a suite rejects. Reports are deterministic for fixed flags and
seed. The environment variable SUPERDS_GOLDEN_DIR redirects stored
expected-value tables to a directory of JSON files.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import SuperDSError
from .report import run_suite

_DS_DEFAULT_TRIALS = 200
_DS_DEFAULT_DIM = 6


def _weight_vector(text):
    body = text.strip().strip("()")
    parts = [piece.strip() for piece in body.split(",") if piece.strip()]
    try:
        values = [int(piece) for piece in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer vector: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError(f"not an integer vector: {text!r}")
    return values


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "md"),
        default="json",
        help="report rendering, canonical JSON or a markdown table",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized suites, recorded in the report",
    )
    return common


def _add_ints(parser, names, required=(), helps=None):
    helps = helps or {}
    for name in names:
        parser.add_argument(
            f"--{name}",
            type=int,
            required=name in required,
            default=None,
            help=helps.get(name, ""),
        )


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="superds",
        description="exact verification of kernel-modulo-image formula tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)

    derham = vsub.add_parser(
        "derham",
        parents=[common],
        help="truncated differential form cohomology, twist map, complement",
    )
    _add_ints(derham, ("p", "s"), required=("p", "s"),
              helps={"p": "odd prime", "s": "number of variables"})

    koszul = vsub.add_parser(
        "koszul", parents=[common], help="acyclic strand slices of free pairs"
    )
    _add_ints(koszul, ("p", "t", "dmax"), required=("p", "t"),
              helps={"t": "number of generator pairs", "dmax": "top degree, default 6"})

    hopf = vsub.add_parser(
        "hopf",
        parents=[common],
        help="bialgebra axioms and the antipode inverse identity",
    )
    _add_ints(hopf, ("p", "m", "n"), required=("p", "n"),
              helps={"m": "even size; omit for the queer catalog"})

    gl = vsub.add_parser(
        "gl", parents=[common], help="rank one symmetry algebra formula table"
    )
    _add_ints(gl, ("p", "m", "n", "i", "j"), required=("p", "m", "n", "i", "j"),
              helps={"i": "even row index", "j": "odd column index, above m"})

    maxrank = vsub.add_parser(
        "gl-maxrank", parents=[common], help="maximal rank element on gl(n|n)"
    )
    _add_ints(maxrank, ("p", "n"), required=("p", "n"))

    queer = vsub.add_parser(
        "q", parents=[common], help="queer catalog formula table"
    )
    _add_ints(queer, ("p", "n", "i", "j"), required=("p", "n", "i", "j"))

    ds = sub.add_parser(
        "ds", parents=[common], help="randomized kernel-modulo-image law checks"
    )
    _add_ints(ds, ("p", "m", "n", "t"), required=("p",),
              helps={"m": "even dimension cap", "n": "odd dimension cap",
                     "t": "number of trials"})

    lie = sub.add_parser("lie", help="Lie algebra level checks")
    lsub = lie.add_subparsers(dest="lie_command", required=True)
    dsq = lsub.add_parser(
        "dsquotient",
        parents=[common],
        help="centralizer modulo bracket image against the generator split",
    )
    _add_ints(dsq, ("p", "m", "n", "i", "j"), required=("p", "m", "n"),
              helps={"i": "omit together with --j for the maximal rank element"})

    inject = sub.add_parser("inject", help="injectivity over odd primitives")
    isub = inject.add_subparsers(dest="inject_command", required=True)
    check = isub.add_parser(
        "check",
        parents=[common],
        help="decide a module file: free, or a certified witness",
    )
    check.add_argument("module", help="path to a module JSON file")
    check.add_argument(
        "--max-ext",
        type=int,
        default=None,
        help="largest allowed coefficient field degree before giving up",
    )

    weights = sub.add_parser("weights", help="weight order queries")
    wsub = weights.add_subparsers(dest="weights_command", required=True)
    leq = wsub.add_parser(
        "leq", parents=[common], help="order decision, cross-checked by search"
    )
    leq.add_argument("mu", type=_weight_vector, help="lower weight, e.g. 1,1")
    leq.add_argument("lam", type=_weight_vector, help="upper weight, e.g. 0,0")
    interval = wsub.add_parser(
        "interval", parents=[common], help="all weights between two endpoints"
    )
    interval.add_argument("mu", type=_weight_vector)
    interval.add_argument("lam", type=_weight_vector)
    interval.add_argument(
        "--dominant", action="store_true", help="keep weakly decreasing weights only"
    )
    return parser


def _collect(args, names):
    out = {}
    for name in names:
        value = getattr(args, name)
        if value is not None:
            out[name] = value
    return out


def _dispatch(args):
    """Map parsed arguments to a suite name, parameters, and seed."""
    if args.command == "verify":
        if args.suite == "derham":
            return "derham", _collect(args, ("p", "s")), args.seed
        if args.suite == "koszul":
            params = _collect(args, ("p", "t", "dmax"))
            params.setdefault("dmax", 6)
            return "koszul", params, args.seed
        if args.suite == "hopf":
            return "hopf", _collect(args, ("p", "m", "n")), args.seed
        if args.suite == "gl":
            return "gl", _collect(args, ("p", "m", "n", "i", "j")), args.seed
        if args.suite == "gl-maxrank":
            return "gl-maxrank", _collect(args, ("p", "n")), args.seed
        return "q", _collect(args, ("p", "n", "i", "j")), args.seed
    if args.command == "ds":
        params = _collect(args, ("p", "m", "n", "t"))
        params.setdefault("m", _DS_DEFAULT_DIM)
        params.setdefault("n", _DS_DEFAULT_DIM)
        params.setdefault("t", _DS_DEFAULT_TRIALS)
        seed = 0 if args.seed is None else args.seed
        return "ds", params, seed
    if args.command == "lie":
        return "lie-dsquotient", _collect(args, ("p", "m", "n", "i", "j")), args.seed
    if args.command == "inject":
        with open(args.module, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        params = {"module": data}
        if args.max_ext is not None:
            params["max_ext"] = args.max_ext
        return "inject", params, args.seed
    params = {"mu": args.mu, "lam": args.lam}
    if args.weights_command == "interval":
        params["dominant"] = bool(args.dominant)
        return "weights-interval", params, args.seed
    return "weights-leq", params, args.seed


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        name, params, seed = _dispatch(args)
        report = run_suite(name, params, seed)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SuperDSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "md":
        sys.stdout.write(report.to_markdown())
    else:
        sys.stdout.buffer.write(report.to_json_bytes())
        sys.stdout.buffer.flush()
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
