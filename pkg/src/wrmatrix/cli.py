"""Command-line front end: ``wrmatrix gen|factor|det|act|verify``.

Exit codes: 0 success, 1 unparseable input, 2 a construction's hypothesis does not
hold (or alpha[0] != beta[0]), 3 an identity failed to verify.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import determinants as dets
from . import factorization as fac
from . import group as grp
from . import verify as ver
from .errors import BoundaryMismatchError, HypothesisError
from .exact import parse_rational
from .sequences import parse_sequence_spec
from .wrm import RecurrenceParams, WrmDescriptor, build_wrm, det_bareiss

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _rationals(text: str, count: int, what: str):
    parts = text.split(",")
    if len(parts) != count:
        raise ValueError(f"{what} needs {count} comma-separated rationals, got {text!r}")
    return [parse_rational(p) for p in parts]


def _params(text: str) -> RecurrenceParams:
    return RecurrenceParams.of(*_rationals(text, 3, "--params"))


def _descriptor(args) -> WrmDescriptor:
    params = _params(args.params)
    alpha, beta = parse_sequence_spec(args.alpha), parse_sequence_spec(args.beta)
    return WrmDescriptor.from_specs(params, alpha, beta, args.n)


def parse_wrm_spec(text: str, n: int) -> WrmDescriptor:
    """``"x,y,z;ALPHA;BETA"``, e.g. ``"1,0,1;const:1;const:1"``."""
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError(f"descriptor must be 'x,y,z;ALPHA;BETA': {text!r}")
    return WrmDescriptor.from_specs(
        _params(parts[0]), parse_sequence_spec(parts[1]), parse_sequence_spec(parts[2]), n
    )


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _add_wrm_args(p):
    p.add_argument("--params", required=True, help="x,y,z (use --params=-1,2,3 for a leading minus)")
    p.add_argument("--alpha", required=True, help="first-column sequence spec")
    p.add_argument("--beta", required=True, help="first-row sequence spec")
    p.add_argument("--n", type=_positive, required=True, help="matrix order")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wrmatrix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="print a weighted recurrence matrix")
    _add_wrm_args(p)
    p.add_argument("--out", choices=["json", "csv", "latex"], default="json")

    p = sub.add_parser("factor", help="factor a matrix and verify the product")
    _add_wrm_args(p)
    p.add_argument("--mode", choices=["unifying", "toeplitz", "tan", "mp"], default="toeplitz")
    p.add_argument("--rsvw", help="r,s,v,w for --mode unifying (default 1,z,y+xz,x)")
    p.add_argument("--out", choices=["json", "latex"], default="json")

    p = sub.add_parser("det", help="exact determinant")
    _add_wrm_args(p)
    p.add_argument("--method", choices=["bareiss", "eq11", "closed"], default="bareiss")
    p.add_argument("--report", choices=["json"], help="emit both values and the agreement flag")

    p = sub.add_parser("act", help="apply a group element to a descriptor")
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("--g", required=True, help="group element v,w (v != 0)")
    p.add_argument("--desc", required=True, help="'x,y,z;ALPHA;BETA'")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--action", action="store_true", help="use the group action (left side: multiply by g^-1)")
    p.add_argument("--check", action="store_true", help="verify against the explicit matrix product")

    p = sub.add_parser("verify", help="seeded randomized identity checks")
    p.add_argument("--trials", type=_positive, default=100, help="trials per suite")
    p.add_argument("--seed", type=int, help=f"base seed (default ${ver.SEED_ENV_VAR} or {ver.DEFAULT_SEED})")
    p.add_argument("--suite", action="append", choices=sorted(ver.SUITES), help="repeatable; default all")
    p.add_argument("--trial", type=int, help="replay a single trial index")
    p.add_argument("--bound", type=_positive, default=9, help="numerator bound for random rationals")
    p.add_argument("--den-bound", type=_positive, default=5, help="denominator bound for random rationals")
    p.add_argument("--max-n", type=_positive, help="override every suite's maximum order")
    p.add_argument("--out", choices=["text", "json"], default="text")
    return parser


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_gen(args) -> int:
    P = build_wrm(_descriptor(args))
    if args.out == "json":
        print(P.to_json())
    elif args.out == "csv":
        sys.stdout.write(P.to_csv())
    else:
        print(P.to_latex())
    return EXIT_OK


def cmd_factor(args) -> int:
    d = _descriptor(args)
    rsvw = _rationals(args.rsvw, 4, "--rsvw") if args.rsvw else None
    if args.mode == "unifying":
        if rsvw is None:
            x, y, z = d.params
            rsvw = [1, z, y + x * z, x]
        f = fac.unifying_factorization(d, *rsvw)
    elif rsvw is not None:
        raise ValueError("--rsvw only applies to --mode unifying")
    elif args.mode == "toeplitz":
        try:
            f = fac.toeplitz_factorization(d)
        except HypothesisError as exc:
            raise HypothesisError(f"{exc} (try: factor --mode unifying --rsvw r,s,v,w)") from exc
    elif args.mode == "tan":
        f = fac.tan_factorization(d)
    else:
        f = fac.mp_factorization(d)
    ok = fac.verify_factorization(f)
    if args.out == "json":
        _emit(dict(mode=args.mode, verified=ok, **f.to_json_obj()))
    else:
        print(f.to_latex())
        print(f"% verified: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_det(args) -> int:
    d = _descriptor(args)
    if args.method == "bareiss":
        value = det_bareiss(build_wrm(d))
        if args.report:
            _emit({"n": d.n, "formula": "bareiss", "bareiss": str(value)})
        else:
            print(value)
        return EXIT_OK
    report = dets.det_report(d, args.method)
    if args.report:
        _emit(report.to_json_obj())
    else:
        print(report.closed_form)
    return EXIT_OK if report.agrees else EXIT_VERIFY


def cmd_act(args) -> int:
    g = grp.parse_group_element(args.g)
    d = parse_wrm_spec(args.desc, args.n)
    if args.side == "left":
        fn = grp.group_action_left if args.action else grp.left_mul_descriptor
    else:
        fn = grp.group_action_right if args.action else grp.right_mul_descriptor
    result = fn(g, d)
    out = {
        "side": args.side,
        "mode": "action" if args.action else "multiply",
        "g": [str(g.v), str(g.w)],
        "input": d.to_json_obj(),
        "result": result.to_json_obj(),
    }
    ok = True
    if args.check:
        h = grp.inverse(g) if args.action and args.side == "left" else g
        G = grp.to_matrix(h, d.n)
        expected = G @ build_wrm(d) if args.side == "left" else build_wrm(d) @ G.T
        ok = build_wrm(result) == expected
        out["check"] = ok
    _emit(out)
    return EXIT_OK if ok else EXIT_VERIFY


def _resolve_seed(args):
    if args.seed is not None:
        return args.seed, "--seed"
    env = os.environ.get(ver.SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env), f"env {ver.SEED_ENV_VAR}"
        except ValueError:
            raise ValueError(f"{ver.SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return ver.DEFAULT_SEED, "default"


def cmd_verify(args) -> int:
    seed, source = _resolve_seed(args)
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    names = args.suite or list(ver.SUITES)
    trials, first = (1, args.trial) if args.trial is not None else (args.trials, 0)
    results = [
        ver.run_suite(name, trials, seed, args.bound, args.den_bound, args.max_n, first_trial=first)
        for name in names
    ]
    ok = all(r.ok for r in results)
    if args.out == "json":
        _emit(
            {
                "seed": seed,
                "seed_source": source,
                "trials_per_suite": trials,
                "suites": [
                    {
                        "name": r.name,
                        "trials": r.trials,
                        "passed": r.passed,
                        "failed": len(r.failures),
                        "rejected": r.rejections,
                        "failures": r.failures,
                    }
                    for r in results
                ],
                "result": "PASS" if ok else "FAIL",
            }
        )
        return EXIT_OK if ok else EXIT_VERIFY
    print("# wrmatrix verify")
    print(f"# seed: {seed} (from {source})")
    print(f"# trials per suite: {trials}" + (f" (replaying trial {first})" if args.trial is not None else ""))
    print(f"{'suite':<14}{'trials':>8}{'passed':>8}{'failed':>8}{'rejected':>10}")
    for r in results:
        print(f"{r.name:<14}{r.trials:>8}{r.passed:>8}{len(r.failures):>8}{r.rejections:>10}")
    for r in results:
        for failure in r.failures:
            print(f"FAIL {r.name} trial={failure['trial']} seed={failure['trial_seed']}")
            print("  " + json.dumps(failure, sort_keys=True))
            print(f"  replay: wrmatrix verify --seed {seed} --suite {r.name} --trial {failure['trial']}")
    total = sum(r.trials for r in results)
    print(f"RESULT: {'PASS' if ok else 'FAIL'} ({len(results)} suites, {total} trials)")
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"gen": cmd_gen, "factor": cmd_factor, "det": cmd_det, "act": cmd_act, "verify": cmd_verify}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (HypothesisError, BoundaryMismatchError) as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
