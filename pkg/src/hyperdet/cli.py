"""Command-line interface: ``hyperdet <command> ...``.

Exit codes: 0 success, 2 parse or flag error, 3 dimension error,
4 degenerate input where nondegeneracy is required, 5 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
import time

from .determinant import hyperdeterminant, symbolic_hyperdet, variable_names
from .fields import QQ, FieldError, PrimeField
from .hypermatrix import DimensionMismatch, Hypermatrix
from .oracles import (
    BudgetExceeded,
    CountReport,
    count_formula,
    default_threads,
    degenerate_pencil_oracle,
    enumerate_nondegenerate,
)
from .rational_functions import InfeasibleError
from .reduction import Degenerate, canonicalize, log_to_json, replay, transporter

EXIT_OK, EXIT_PARSE, EXIT_DIM, EXIT_DEGENERATE, EXIT_BUDGET = 0, 2, 3, 4, 5
BUDGET_ENV = "HYPERDET_BUDGET"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _env_budget():
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(EXIT_PARSE, f"{BUDGET_ENV} must be an integer, got {raw!r}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}")


def _load_hypermatrix(path: str) -> Hypermatrix:
    text = _read_text(path)
    try:
        return Hypermatrix.from_json(json.loads(text))
    except DimensionMismatch as exc:
        raise CliError(EXIT_DIM, f"dimension error: {exc}")
    except (json.JSONDecodeError, KeyError, FieldError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise CliError(EXIT_PARSE, f"cannot parse hypermatrix: {exc}")


def _emit(obj):
    print(json.dumps(obj))


# --- commands ------------------------------------------------------------

def cmd_det(args):
    M = _load_hypermatrix(args.input)
    _emit(hyperdeterminant(M).to_json(M.field))


def cmd_reduce(args):
    M = _load_hypermatrix(args.input)
    out = canonicalize(M)
    if not out.reduced:
        raise CliError(EXIT_DEGENERATE, f"degenerate: {out.reason}")
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(log_to_json(out.log, M.field))
    if args.verify and replay(M, out.log) != out.hypermatrix:
        raise CliError(1, "log replay does not reproduce the reduced hypermatrix")
    _emit(out.hypermatrix.to_json())


def cmd_check(args):
    M = _load_hypermatrix(args.input)
    out = canonicalize(M, log=False, track=False)
    oracle = degenerate_pencil_oracle(M)
    algorithm = not out.reduced
    _emit({"degenerate": algorithm, "reason": out.reason, "oracle_degenerate": oracle,
           "agree": algorithm == oracle})


def cmd_transporter(args):
    M1 = _load_hypermatrix(args.source)
    M2 = _load_hypermatrix(args.target)
    if M1.k != M2.k:
        raise CliError(EXIT_DIM, "hypermatrices have different k")
    if M1.field != M2.field:
        raise CliError(EXIT_PARSE, "hypermatrices are over different fields")
    try:
        g = transporter(M1, M2)
    except Degenerate as exc:
        raise CliError(EXIT_DEGENERATE, f"degenerate: {exc.reason}")
    _emit(g.canonical().to_json())


def cmd_count(args):
    report = CountReport(args.k, args.q, count_formula(args.k, args.q))
    if args.mode in ("enumerate", "both"):
        methods = ("algorithm", "oracle") if args.method == "both" else (args.method,)
        budget = args.budget if args.budget is not None else _env_budget()
        res = enumerate_nondegenerate(args.k, args.q, methods, budget, args.threads)
        counts = [c for c in (res.algorithm, res.oracle) if c is not None]
        report.enumerated = counts[0]
        if len(set(counts)) > 1:
            print(f"methods disagree: algorithm={res.algorithm} oracle={res.oracle}",
                  file=sys.stderr)
            report.enumerated = res.algorithm
    _emit(report.to_json())


def cmd_formula(args):
    budget = args.budget if args.budget is not None else _env_budget()
    kwargs = {} if budget is None else {"term_budget": budget}
    poly = symbolic_hyperdet(args.k, reduced=not args.general, **kwargs)
    names = variable_names(args.k, reduced=not args.general)
    if args.format == "json":
        _emit({"variables": names, "terms": poly.to_json()})
    else:
        print(poly.to_text(names))
    coeffs = poly.coefficients()
    print(f"terms={len(poly)} degree={poly.total_degree()} "
          f"coefficients=[{min(coeffs)}, {max(coeffs)}]", file=sys.stderr)


def _random_hypermatrix(k, F, rng):
    return Hypermatrix._wrap(F, k, [[[F.random(rng) for _ in range(k)] for _ in range(k + 1)]
                                    for _ in range(2)])


def cmd_bench(args):
    if args.field == "fp":
        try:
            F = PrimeField(args.p)
        except FieldError as exc:
            raise CliError(EXIT_PARSE, str(exc))
    else:
        F = QQ
    if args.kmin < 1 or args.kmax < args.kmin or args.reps < 1:
        raise CliError(EXIT_PARSE, "need 1 <= kmin <= kmax and reps >= 1")
    rng = random.Random(args.seed)
    print("k,opCount,wallTimeMs")
    k = args.kmin
    while k <= args.kmax:
        ops = []
        times = []
        for _ in range(args.reps):
            M = _random_hypermatrix(k, F, rng)
            t0 = time.perf_counter()
            res = hyperdeterminant(M)
            times.append((time.perf_counter() - t0) * 1000.0)
            ops.append(res.op_count)
        print(f"{k},{int(statistics.median(ops))},{statistics.median(times):.3f}")
        sys.stdout.flush()
        k *= 2


# --- parser ----------------------------------------------------------------

def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperdet",
                                description="Hyperdeterminants of 2 x k x (k+1) hypermatrices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("det", help="hyperdeterminant of a hypermatrix JSON file")
    s.add_argument("input", help="hypermatrix JSON file, or - for stdin")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("reduce", help="reduce to I_{k,k+1} and print the result")
    s.add_argument("input")
    s.add_argument("--log", help="write the operation log JSON here")
    s.add_argument("--verify", action="store_true", help="replay the log and check it")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("check", help="degeneracy verdicts of the reduction and the pencil oracle")
    s.add_argument("input")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("transporter", help="group element carrying SOURCE to TARGET")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_transporter)

    s = sub.add_parser("count", help="count nondegenerate hypermatrices over F_q")
    s.add_argument("--k", type=_positive_int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--mode", choices=("formula", "enumerate", "both"), default="formula")
    s.add_argument("--method", choices=("algorithm", "oracle", "both"), default="algorithm")
    s.add_argument("--budget", type=int, help="maximum number of enumerated states")
    s.add_argument("--threads", type=_positive_int, default=default_threads())
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("formula", help="symbolic hyperdeterminant polynomial")
    s.add_argument("--k", type=_positive_int, required=True)
    s.add_argument("--general", action="store_true", help="indeterminates in both slices")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--budget", type=int, help="intermediate term budget")
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("bench", help="operation counts and timings for random inputs")
    s.add_argument("--kmin", type=int, default=2)
    s.add_argument("--kmax", type=int, default=16)
    s.add_argument("--field", choices=("fp", "rational"), default="fp")
    s.add_argument("--p", type=int, default=10007)
    s.add_argument("--reps", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=_positive_int, default=1,
                   help="accepted for interface stability; timings run serially")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count" and args.q < 2:
            raise CliError(EXIT_PARSE, "--q must be at least 2")
        args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
