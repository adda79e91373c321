"""Command-line front end.

Subcommands: ``verify`` (run the theorem/lemma check suites), ``bound``
(evaluate a bound report on user matrices), ``construct`` (emit adversarial
instances), and ``experiment`` (run the Monte Carlo sweeps).

Machine-parseable CSV goes to stdout (or the requested file); diagnostics
go to stderr. Exit codes: 0 success, 1 violation/ordering failure, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bounds import BoundReport, PerturbationInstance, bound_report
from .constructions import (MinimaxPair, TightnessParams, decaying_noise,
                            example1_spectrum, minimax_pair,
                            tightness_instance)
from .experiments import (ExperimentConfig, emit_csv, ordering_checks,
                          run_sweep)
from .linalg import load_matrix, save_matrix
from .norms import SchattenIndex
from .verification import FAULTS, PROFILES, SCOPES, run_scope


def _parse_q(text: str) -> SchattenIndex:
    try:
        return SchattenIndex(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


def cmd_verify(args) -> int:
    try:
        results = run_scope(args.scope, seed=args.seed, profile=args.profile,
                            fault=args.fault_inject)
    except ValueError as exc:
        return _fail(str(exc))
    print("check,checked,violations,worst_margin")
    for res in results:
        print(f"{res.name},{res.checked},{res.violations},"
              f"{res.worst_margin:.6g}")
    bad = [res for res in results if not res.passed]
    for res in bad:
        print(f"violated: {res.name} ({res.violations} of {res.checked})",
              file=sys.stderr)
    return 1 if bad else 0


def cmd_bound(args) -> int:
    try:
        A = load_matrix(args.matrix_a)
    except Exception as exc:
        return _fail(f"cannot read {args.matrix_a}: {exc}")
    try:
        Z = load_matrix(args.matrix_z)
    except Exception as exc:
        return _fail(f"cannot read {args.matrix_z}: {exc}")
    if A.shape != Z.shape:
        return _fail(f"shape mismatch: {args.matrix_a} is {A.shape}, "
                     f"{args.matrix_z} is {Z.shape}")
    try:
        inst = PerturbationInstance.from_truth(A, Z, args.rank)
    except ValueError as exc:
        return _fail(str(exc))
    print(BoundReport.csv_header())
    violated = False
    instance_id = os.path.basename(args.matrix_a)
    for q in args.q:
        rep = bound_report(inst, q)
        print(rep.csv_row(instance_id))
        violated = violated or bool(rep.violations)
    return 1 if violated else 0


def _write_instance(out_dir: str, inst: PerturbationInstance,
                    suffix: str = "") -> None:
    save_matrix(os.path.join(out_dir, f"A{suffix}.csv"), inst.a)
    save_matrix(os.path.join(out_dir, f"Z{suffix}.csv"), inst.z)
    save_matrix(os.path.join(out_dir, f"B{suffix}.csv"), inst.b)


def _write_metadata(out_dir: str, entries: dict) -> None:
    with open(os.path.join(out_dir, "metadata.txt"), "w",
              encoding="utf-8", newline="\n") as fh:
        for key, value in entries.items():
            fh.write(f"{key}={value}\n")


def cmd_construct(args) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    try:
        if args.kind == "tightness":
            params = TightnessParams(r=args.rank, q=args.q, eta=args.eta,
                                     m=args.rows, n=args.cols)
            inst = tightness_instance(params)
            _write_instance(args.out_dir, inst)
            _write_metadata(args.out_dir, {
                "kind": "tightness", "r": args.rank, "q": args.q,
                "eta": args.eta})
        elif args.kind == "minimax":
            pair = minimax_pair(args.rank, args.q, args.xi,
                                (args.rows, args.cols))
            _write_instance(args.out_dir, pair.first, "1")
            _write_instance(args.out_dir, pair.second, "2")
            _write_metadata(args.out_dir, {
                "kind": "minimax", "r": args.rank, "q": args.q,
                "xi": args.xi})
        else:  # example1
            if args.seed is None:
                return _fail("example1 requires --seed")
            Z = decaying_noise(args.rows, args.cols, args.seed, q=args.q)
            save_matrix(os.path.join(args.out_dir, "Z.csv"), Z)
            spectrum = example1_spectrum(min(args.rows, args.cols), args.q)
            save_matrix(os.path.join(args.out_dir, "spectrum.csv"),
                        spectrum[None, :])
            _write_metadata(args.out_dir, {
                "kind": "example1", "q": args.q, "seed": args.seed})
    except ValueError as exc:
        return _fail(str(exc))
    return 0


def cmd_experiment(args) -> int:
    try:
        cfg = ExperimentConfig(
            n=args.n, r_grid=tuple(args.r_grid), sigma=args.sigma,
            spike=not args.no_spike, decay=args.decay, trials=args.trials,
            q=args.q, seed=args.seed)
    except ValueError as exc:
        return _fail(str(exc))
    result = run_sweep(cfg, args.study, n_jobs=args.jobs)
    emit_csv(result, args.out)
    checks = ordering_checks(result)
    summary = " ".join(f"{name}={'pass' if ok else 'FAIL'}"
                       for name, ok in checks.items())
    print(f"ordering: {summary}", file=sys.stderr)
    return 0 if all(checks.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schattenperturb",
        description="Schatten-q perturbation bounds for truncated SVD: "
                    "verification, reports, constructions, experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the theorem/lemma check suites")
    p.add_argument("--scope", default="all",
                   choices=("all",) + tuple(SCOPES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", default="ci", choices=tuple(PROFILES))
    p.add_argument("--fault-inject", default=None, choices=FAULTS,
                   help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="evaluate bounds on user matrices")
    p.add_argument("--matrix-a", required=True)
    p.add_argument("--matrix-z", required=True)
    p.add_argument("--rank", "-r", type=int, required=True)
    p.add_argument("--q", type=_parse_q, nargs="+",
                   default=[SchattenIndex(2)],
                   help="exponents: decimal numbers or 'inf'")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="emit adversarial instances")
    p.add_argument("kind", choices=("tightness", "minimax", "example1"))
    p.add_argument("--rank", "-r", type=int, default=1)
    p.add_argument("--q", type=_parse_q, default=SchattenIndex(2))
    p.add_argument("--eta", type=float, default=0.1)
    p.add_argument("--xi", type=float, default=1.0)
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=6)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("experiment", help="run a Monte Carlo sweep")
    p.add_argument("study", choices=("estimation", "projection"))
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--r-grid", type=int, nargs="+",
                   default=[4, 6, 8, 10, 12, 14, 16])
    p.add_argument("--sigma", type=float, default=0.02)
    p.add_argument("--no-spike", action="store_true")
    p.add_argument("--decay", default="polynomial",
                   choices=("polynomial", "exponential"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--q", type=_parse_q, default=SchattenIndex(2))
    p.add_argument("--seed", type=int, required=True,
                   help="master seed (no hidden entropy)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    # argparse already exits 2 on usage errors
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
