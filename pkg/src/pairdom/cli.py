"""Command-line interface.

Subcommands: solve, label, oracle (read a tree file, '-' for stdin),
sample, constants, simulate, fixtures.  Output is line-oriented key=value
text with stable ordering.  Exit codes: 0 success, 1 usage error, 2 domain
error (bad input values, malformed files, unreachable sizes, ...).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from .constants import solve_system
from .domination import gamma_pr_bruteforce, gamma_pr_linear, label_recursive, phi_from_labels
from .domination import build_fixtures, gamma_from_labels
from .errors import PairDomError
from .offspring import BUILTIN_MODELS, get_distribution, load_pmf_file
from .sampling import SeededRng, sample_conditioned
from .simulate import format_summary_kv, run_simulation, write_histogram_csv, write_summary_kv
from .trees import bfs_canonicalize, parse, serialize


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_tree(spec: str):
    if spec == "-":
        return parse(sys.stdin.read())
    return parse(Path(spec).read_text(encoding="ascii"))


def _fmt_pairs(pairs) -> str:
    return " ".join(f"{a}:{b}" for a, b in sorted(pairs))


def _resolve_dist(args):
    pmf = load_pmf_file(args.pmf) if getattr(args, "pmf", None) else None
    return get_distribution(args.model, pmf=pmf)


def _cmd_solve(args) -> int:
    tree = _read_tree(args.file)
    canonical, perm = bfs_canonicalize(tree)
    result = gamma_pr_linear(canonical)
    inv = np.zeros(tree.n + 1, np.int64)
    inv[perm[1:]] = np.arange(1, tree.n + 1)
    members = sorted(int(inv[v]) for v in result.members)
    pairs = [tuple(sorted((int(inv[a]), int(inv[b])))) for a, b in result.pairs]
    print(f"n={tree.n}")
    print(f"gamma_pr={result.gamma_pr}")
    print(f"phi={result.phi}")
    print(f"root_label={result.root_label}")
    print(f"members={' '.join(str(v) for v in members)}")
    print(f"pairs={_fmt_pairs(pairs)}")
    return 0


def _cmd_label(args) -> int:
    tree = _read_tree(args.file)
    labels = label_recursive(tree)
    print(f"n={tree.n}")
    print(f"labels={' '.join(labels[1:])}")
    print(f"phi={phi_from_labels(labels)}")
    if tree.n >= 2:
        print(f"gamma_pr={gamma_from_labels(labels)}")
    return 0


def _cmd_oracle(args) -> int:
    tree = _read_tree(args.file)
    print(f"n={tree.n}")
    print(f"gamma_pr={gamma_pr_bruteforce(tree)}")
    return 0


def _cmd_sample(args) -> int:
    dist = _resolve_dist(args)
    tree = sample_conditioned(dist, args.n, SeededRng(args.seed, args.stream))
    sys.stdout.write(serialize(tree))
    return 0


def _cmd_constants(args) -> int:
    models = list(BUILTIN_MODELS) if args.model == "all" else [args.model]
    rows = []
    for model in models:
        dist = _resolve_dist(args) if model == "custom" else get_distribution(model)
        sol = solve_system(dist, tol=args.tol)
        rows.append((model, sol))
        print(f"model={model}")
        for key, val in (
            ("x_B", sol.x_b),
            ("x_F", sol.x_f),
            ("x_R", sol.x_r),
            ("x_P", sol.x_p),
            ("mu_pr", sol.mu_pr),
        ):
            print(f"{key}={val:.10g}")
        print(f"residual={sol.residual:.3e}")
        print(f"iterations={sol.iterations}")
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write("model,x_B,x_F,x_R,x_P,mu_pr,residual,iterations\n")
            for model, sol in rows:
                fh.write(
                    f"{model},{sol.x_b:.10g},{sol.x_f:.10g},{sol.x_r:.10g},"
                    f"{sol.x_p:.10g},{sol.mu_pr:.10g},{sol.residual:.3e},{sol.iterations}\n"
                )
    return 0


def _cmd_simulate(args) -> int:
    dist = _resolve_dist(args)
    t0 = time.perf_counter()
    summary = run_simulation(dist, args.n, args.reps, args.seed, workers=args.workers)
    elapsed = time.perf_counter() - t0
    sys.stdout.write(format_summary_kv(summary))
    print(f"elapsed_s={elapsed:.3f}")
    if args.csv:
        write_histogram_csv(summary, args.csv)
        write_summary_kv(summary, Path(args.csv).with_suffix(".summary"))
    return 0


def _cmd_fixtures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    trees = build_fixtures(args.d0)
    for name, tree in zip(("tau0", "t1", "t2", "tau1", "tau2"), trees):
        path = out / f"{name}.tree"
        path.write_text(serialize(tree), encoding="ascii")
        print(f"{name}={path}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="pairdom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, doc in (
        ("solve", _cmd_solve, "gamma_pr, PD-set members and pairing of a tree file"),
        ("label", _cmd_label, "B/F/R/P label per vertex of a tree file"),
        ("oracle", _cmd_oracle, "brute-force gamma_pr of a tree file (n <= 18)"),
    ):
        p = sub.add_parser(name, help=doc)
        p.add_argument("file", help="tree file in the two-line text format, '-' for stdin")
        p.set_defaults(fn=fn)

    p = sub.add_parser("sample", help="sample one conditioned tree to stdout")
    p.add_argument("--model", required=True, choices=(*BUILTIN_MODELS, "custom"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--stream", type=int, default=0)
    p.add_argument("--pmf", help="custom pmf file with 'k p_k' lines")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("constants", help="solve the root-label fixed point")
    p.add_argument("--model", required=True, choices=(*BUILTIN_MODELS, "custom", "all"))
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--pmf", help="custom pmf file with 'k p_k' lines")
    p.add_argument("--csv", help="also write a CSV row per model")
    p.set_defaults(fn=_cmd_constants)

    p = sub.add_parser("simulate", help="Monte-Carlo gamma_pr over random trees")
    p.add_argument("--model", required=True, choices=(*BUILTIN_MODELS, "custom"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="histogram CSV path; also writes <stem>.summary")
    p.add_argument("--pmf", help="custom pmf file with 'k p_k' lines")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("fixtures", help="write tau0/t1/t2/tau1/tau2 tree files")
    p.add_argument("--d0", type=int, required=True)
    p.add_argument("--out", default=".")
    p.set_defaults(fn=_cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.fn(args)
    except PairDomError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
