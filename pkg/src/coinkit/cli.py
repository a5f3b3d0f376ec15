"""Command-line front end: solve, cross-check against oracles, benchmark."""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .convkit import INF
from .corekit import (
    ValidationError,
    dp_all_capacities,
    dp_all_targets,
    implicit_query,
    json_cost,
    normalize_coins,
    normalize_items,
    render_cost,
)
from .fastsingle import min_coins_single
from .generate import random_coins, random_items, random_word_break, rng_for
from .heavylight import all_targets_t32, all_targets_t43
from .knapsack import algo2_all_capacities, single_capacity_nu, tsigma_all_capacities
from .topk_dp import algo1_all_targets, implicit_all_targets, tsigma_all_targets
from .wordbreak import make_instance, min_word_break, naive_word_break, parse_dictionary
from .work import WorkCounter

DEFAULT_ORACLE_BUDGET = 10 ** 7

# Test-only hook: when set, ``verify`` corrupts this entry of the fast result.
FAULT_INDEX = None

COINS_ALL = {
    "dp": dp_all_targets,
    "t32": all_targets_t32,
    "t43": all_targets_t43,
    "algo1": algo1_all_targets,
    "tsigma": tsigma_all_targets,
}
KNAPSACK_ALL = {
    "dp": dp_all_capacities,
    "algo2": algo2_all_capacities,
    "tsigma": tsigma_all_capacities,
}


def _implicit_single(coins, t, counter=None):
    if not coins:
        return 0 if t == 0 else INF
    return implicit_query(implicit_all_targets(coins, counter), t)


def _entry(fn):
    return lambda obj, t, counter=None: int(fn(obj, t, counter)[t])


COINS_SINGLE = {"fftu": min_coins_single, "implicit": _implicit_single}
COINS_SINGLE.update({k: _entry(f) for k, f in COINS_ALL.items()})
KNAPSACK_SINGLE = {"nu": single_capacity_nu}
KNAPSACK_SINGLE.update({k: _entry(f) for k, f in KNAPSACK_ALL.items()})


def _fast_word_break(inst, counter=None):
    return min_word_break(inst)


def _naive_word_break(inst, counter=None):
    return np.array(naive_word_break(inst, budget=float("inf")), dtype=np.int64)


WORDBREAK = {"fast": _fast_word_break, "naive": _naive_word_break}

ALGOS = {
    "coins-all": COINS_ALL,
    "coins-single": COINS_SINGLE,
    "knapsack-all": KNAPSACK_ALL,
    "knapsack-single": KNAPSACK_SINGLE,
    "wordbreak": WORDBREAK,
}
DEFAULT_ALGO = {
    "coins-all": "algo1",
    "coins-single": "fftu",
    "knapsack-all": "algo2",
    "knapsack-single": "nu",
    "wordbreak": "fast",
}


# ---------------------------------------------------------------- input

def parse_ints(text, source):
    """Whitespace-separated positive integers, with line:column diagnostics."""
    out = []
    for ln, line in enumerate(text.splitlines(), 1):
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            if not tok.isdigit() or int(tok) <= 0:
                raise ValidationError(f"{source}:{ln}:{col + 1}: expected a positive integer, got {tok!r}")
            out.append(int(tok))
            col += len(tok)
    return out


def parse_items(text, source):
    """One ``weight profit`` pair per nonblank line."""
    items = []
    for ln, line in enumerate(text.splitlines(), 1):
        toks = line.split()
        if not toks:
            continue
        if len(toks) != 2:
            raise ValidationError(f"{source}:{ln}:1: expected 'weight profit', got {line.strip()!r}")
        col = 0
        pair = []
        for tok in toks:
            col = line.index(tok, col)
            if not tok.isdigit() or int(tok) <= 0:
                raise ValidationError(f"{source}:{ln}:{col + 1}: expected a positive integer, got {tok!r}")
            pair.append(int(tok))
            col += len(tok)
        items.append(tuple(pair))
    return items


def _read(path, mode="r"):
    try:
        with open(path, mode) as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"{path}: {exc.strerror}") from None


def _target(args):
    if args.target is None:
        raise ValidationError("--target is required")
    if args.target < 0:
        raise ValidationError(f"--target must be nonnegative, got {args.target}")
    return args.target


def load_instance(problem, args):
    """Parsed problem input: CoinSet, KnapsackInstance or WordBreakInstance, plus target."""
    if problem.startswith("coins"):
        if args.inline is not None:
            raw = parse_ints(args.inline, "<inline>")
        elif args.coins is not None:
            raw = parse_ints(_read(args.coins), args.coins)
        else:
            raise ValidationError("give coins with --coins FILE or --inline '...'")
        t = _target(args)
        return normalize_coins(raw, t), t
    if problem.startswith("knapsack"):
        if args.items is not None:
            raw = parse_items(_read(args.items), args.items)
        elif args.inline is not None:
            raw = parse_items(args.inline.replace(",", "\n"), "<inline>")
        else:
            raise ValidationError("give items with --items FILE or --inline 'w p, w p, ...'")
        t = _target(args)
        return normalize_items(raw, t), t
    if args.text is None or args.dict is None:
        raise ValidationError("wordbreak needs --text FILE and --dict FILE")
    text = _read(args.text, "rb")
    words = parse_dictionary(_read(args.dict, "rb"))
    inst = make_instance(text, words)
    return inst, inst.n


def _algo(problem, name):
    table = ALGOS[problem]
    name = name or DEFAULT_ALGO[problem]
    if name not in table:
        raise ValidationError(f"unknown algorithm {name!r} for {problem}; choose from {', '.join(sorted(table))}")
    return name, table[name]


def _params(problem, obj, t):
    if problem == "wordbreak":
        return {"n": obj.n, "m": obj.m, "words": len(obj.words)}
    return {"t": t, "n": obj.n, "u": obj.u, "sigma": obj.sigma}


# ---------------------------------------------------------------- output

def _emit(problem, name, obj, t, result, fmt, out):
    """Print a result; returns the exit code."""
    single = problem in ("coins-single", "knapsack-single", "wordbreak")
    if problem == "wordbreak":
        result = int(result[t])
    if single:
        pairs = [(t, int(result))]
    else:
        pairs = list(enumerate(int(x) for x in result))
    if fmt == "json":
        doc = {
            "targets": [{"j": j, "count": json_cost(c)} for j, c in pairs],
            "algo": name,
            "params": _params(problem, obj, t),
        }
        out.write(json.dumps(doc) + "\n")
    elif single:
        out.write(f"{render_cost(pairs[0][1])}\n")
    else:
        out.write("".join(f"{j} {render_cost(c)}\n" for j, c in pairs))
    return 1 if single and pairs[0][1] >= INF else 0


def cmd_run(problem, args, out):
    obj, t = load_instance(problem, args)
    name, fn = _algo(problem, args.algo)
    result = fn(obj) if problem == "wordbreak" else fn(obj, t)
    return _emit(problem, name, obj, t, result, args.format, out)


def cmd_verify(args, out):
    problem = args.problem
    obj, t = load_instance(problem, args)
    name, fn = _algo(problem, args.algo)
    budget = args.oracle_budget
    if problem == "wordbreak":
        size = obj.n * obj.m
    else:
        size = max(obj.n, 1) * (t + 1)
    if size > budget:
        raise ValidationError(f"instance size {size} exceeds the oracle budget {budget}")

    if problem == "wordbreak":
        fast = np.asarray(fn(obj), dtype=np.int64)
        oracle = np.array(naive_word_break(obj, budget=budget), dtype=np.int64)
    elif problem.startswith("coins"):
        oracle = dp_all_targets(obj, t)
        fast = fn(obj, t)
    else:
        oracle = dp_all_capacities(obj, t)
        fast = fn(obj, t)
    if problem.endswith("single"):
        fast = np.array([int(fast)], dtype=np.int64)
        oracle = oracle[t:t + 1]
        offset = t
    else:
        fast = np.array(fast, dtype=np.int64)
        offset = 0

    if FAULT_INDEX is not None and 0 <= FAULT_INDEX - offset < len(fast):
        k = FAULT_INDEX - offset
        fast[k] = 0 if fast[k] >= INF else fast[k] + 1

    bad = np.flatnonzero(fast != oracle)
    if len(bad) == 0:
        out.write("OK\n")
        return 0
    k = int(bad[0])
    out.write(
        f"MISMATCH at index {k + offset}: {name} gave {render_cost(fast[k])}, "
        f"oracle gave {render_cost(oracle[k])}\n"
    )
    return 1


# ---------------------------------------------------------------- bench

def _bench_instance(problem, size, args):
    rng = rng_for(args.seed, problem, size)
    if problem == "wordbreak":
        return random_word_break(rng, size, sigma=2, words=args.n, max_len=args.u or 16), size
    u = args.u or size
    if problem.startswith("coins"):
        return random_coins(rng, args.n, u, log_uniform=args.spread == "log"), size
    return random_items(rng, args.n, u), size


def _bench_cell(problem, name, fn, obj, t):
    counter = WorkCounter()
    start = time.perf_counter_ns()
    if problem == "wordbreak":
        fn(obj)
    else:
        fn(obj, t, counter)
    wall = time.perf_counter_ns() - start
    if problem == "wordbreak":
        row = (name, len(obj.words), obj.n, max((len(w) for w in obj.words), default=0), obj.m)
    else:
        row = (name, obj.n, t, obj.u, obj.sigma)
    return row + (wall, counter.count)


def _parse_sizes(text):
    sizes = [int(s) for s in text.replace(",", " ").split()] if text else []
    if any(s < 0 for s in sizes) or sizes != sorted(sizes):
        raise ValidationError("--sizes must be nonnegative and ascending")
    return sizes


def cmd_bench(args, out):
    problem = args.problem
    names = (args.algo or DEFAULT_ALGO[problem]).split(",")
    fns = [_algo(problem, n) for n in names]
    sizes = _parse_sizes(args.sizes)
    cells = []
    for size in sizes:
        obj, t = _bench_instance(problem, size, args)
        for name, fn in fns:
            cells.append((name, fn, obj, t))
    if cells:
        # compile jitted kernels outside the timed region
        for name, fn in fns:
            small, ts = _bench_instance(problem, 8, args)
            _bench_cell(problem, name, fn, small, ts)
    threads = max(1, int(os.environ.get("COINKIT_THREADS", "1") or 1))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(lambda c: _bench_cell(problem, *c), cells))
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["algo", "n", "t", "u", "sigma", "wall_nanos", "work_counter"])
    w.writerows(rows)
    return 0


# ---------------------------------------------------------------- main

def _common(p, with_algo=True):
    if with_algo:
        p.add_argument("--algo", help="algorithm identifier")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--coins", metavar="FILE", help="coin values, whitespace separated")
    src.add_argument("--inline", metavar="VALUES", help="coins (or 'w p, w p' items) given inline")
    p.add_argument("--items", metavar="FILE", help="knapsack items, one 'weight profit' per line")
    p.add_argument("--text", metavar="FILE", help="word break text (raw bytes)")
    p.add_argument("--dict", metavar="FILE", help="word break dictionary, one word per line")
    p.add_argument("--target", type=int, help="target sum or capacity")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)


def build_parser():
    parser = argparse.ArgumentParser(prog="coinkit", description="Change-making, knapsack and word break solvers.")
    sub = parser.add_subparsers(dest="command", required=True)
    for problem in ALGOS:
        _common(sub.add_parser(problem, help=f"solve {problem}"))
    p = sub.add_parser("verify", help="compare an algorithm with its oracle")
    p.add_argument("--problem", choices=list(ALGOS), default="coins-all")
    _common(p)
    p = sub.add_parser("bench", help="CSV timings and work counters on seeded instances")
    p.add_argument("--problem", choices=list(ALGOS), default="coins-all")
    p.add_argument("--sizes", default="", help="ascending targets (text lengths for wordbreak)")
    p.add_argument("--u", type=int, help="largest coin or weight (default: the size)")
    p.add_argument("--n", type=int, default=20, help="number of coins, items or words")
    p.add_argument("--spread", choices=("uniform", "log"), default="uniform")
    _common(p)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "bench":
            return cmd_bench(args, out)
        return cmd_run(args.command, args, out)
    except (ValidationError, OverflowError) as exc:
        print(f"coinkit: error: {exc}", file=sys.stderr)
        return 2


def run(argv):
    """Run the CLI in-process; returns ``(exit_code, stdout_text)``."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
