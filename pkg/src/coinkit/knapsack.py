"""Unbounded knapsack: all capacities in O(u^2 log u + t), one capacity in O(n u log^2 u).

Profits are exact integers.  Arrays are ``int64`` and every entry point
checks up front that no profit it can produce overflows.
"""

import functools

import numpy as np
from numba import njit

from .corekit import (
    KnapsackInstance,
    ValidationError,
    check_profit_range,
    dp_all_capacities,
)
from .topk_dp import icbrt_ceil
from .work import tally

LOG_TYPES_MAX_J = 60
LOG_TYPES_MAX_N = 6


def _ratio_order(x, y):
    # exact comparison of p/w by cross-multiplication
    (wx, px), (wy, py) = x, y
    lhs, rhs = px * wy, py * wx
    if lhs != rhs:
        return -1 if lhs > rhs else 1
    if px != py:
        return -1 if px > py else 1
    return (wx > wy) - (wx < wy)


def rank_items(inst):
    """Items by profit-to-weight ratio, best first (ties: higher profit, then lower weight)."""
    return tuple(sorted(inst.items, key=functools.cmp_to_key(_ratio_order)))


@njit(cache=True)
def _topk_max_dp(ws, ps, t, bound):
    d = np.zeros(t + 1, dtype=np.int64)
    n = ws.shape[0]
    three_u2 = 3 * bound * bound
    work = 0
    for j in range(1, t + 1):
        k = min(n, (three_u2 + j - 1) // j)
        best = 0
        for i in range(k):
            w = ws[i]
            if w <= j and d[j - w] + ps[i] > best:
                best = d[j - w] + ps[i]
        work += k
        d[j] = best
    return d, work


def algo2_all_capacities(inst, t, counter=None, bound=None):
    """Max profit for every capacity ``0..t``, scanning the ``ceil(3u^2/j)`` best-ratio items."""
    check_profit_range(inst, t)
    u = inst.u if bound is None else bound
    if inst.items and u < inst.u:
        raise ValueError("bound must be at least the largest weight")
    ranked = rank_items(inst)
    ws = np.array([w for w, _ in ranked], dtype=np.int64)
    ps = np.array([p for _, p in ranked], dtype=np.int64)
    d, work = _topk_max_dp(ws, ps, t, u)
    tally(counter, work)
    return d


@njit(cache=True)
def _add_heavy_max(d, ws, ps):
    t = d.shape[0] - 1
    for j in range(1, t + 1):
        best = d[j]
        for i in range(ws.shape[0]):
            w = ws[i]
            if w <= j and d[j - w] + ps[i] > best:
                best = d[j - w] + ps[i]
        d[j] = best
    return d


def tsigma_all_capacities(inst, t, counter=None):
    """All-capacities knapsack in about (t sigma)^(2/3) + t time."""
    check_profit_range(inst, t)
    ell0 = max(1, icbrt_ceil(t * inst.sigma))
    light = KnapsackInstance(tuple(it for it in inst.items if it[0] <= ell0))
    heavy = [it for it in inst.items if it[0] > ell0]
    d = algo2_all_capacities(light, t, counter, bound=ell0)
    if heavy:
        ws = np.array([w for w, _ in heavy], dtype=np.int64)
        ps = np.array([p for _, p in heavy], dtype=np.int64)
        _add_heavy_max(d, ws, ps)
        tally(counter, t * len(heavy))
    return d


@njit(cache=True)
def _window_step(win, t_hat, t_cur, u, ws, ps):
    """Window ``D[t_cur .. t_cur+u]`` from window ``D[t_hat .. t_hat+u]``."""
    out = np.empty(u + 1, dtype=np.int64)
    top = t_hat + u
    for off in range(u + 1):
        j = t_cur + off
        if j <= top:
            out[off] = win[j - t_hat]
            continue
        best = 0
        for i in range(ws.shape[0]):
            w = ws[i]
            x = (j - top + w - 1) // w
            src = j - w * x
            if src < t_hat:
                # smallest multiplier landing back inside the window
                x = (j - t_hat) // w
                src = j - w * x
                if x <= 0 or src > top:
                    continue
            cand = win[src - t_hat] + ps[i] * x
            if cand > best:
                best = cand
        out[off] = best
    return out


def single_capacity_nu(inst, t, counter=None, trace=None):
    """Maximum profit for capacity ``t``.

    Capacities of at least ``3u^2`` are first reduced with copies of the
    best-ratio item.  Then the window ``D[t..t+u]`` is derived from the
    window at ``t - floor(t/b)``, recursively, down to a small base case
    solved by plain DP.  ``trace`` (a list) receives ``(lo, window)`` for
    every level, bottom first.
    """
    if t < 0:
        raise ValidationError("capacity must be nonnegative")
    items = [it for it in inst.items if it[0] <= t]
    if not items or t == 0:
        return 0
    inst = KnapsackInstance(tuple(items))
    u = inst.u
    w_best, p_best = rank_items(inst)[0]
    extra = 0
    if t >= 3 * u * u:
        k = -(-(t - 3 * u * u + 1) // w_best)
        t -= k * w_best
        extra = k * p_best
    check_profit_range(inst, t + u)

    b = (t + u - 1).bit_length() + 1
    chain = [t]
    while chain[-1] > 4 * b:
        chain.append(chain[-1] - chain[-1] // b)
    lo = chain[-1]
    win = dp_all_capacities(inst, lo + u)[lo:]
    tally(counter, inst.n * (lo + u + 1))
    if trace is not None:
        trace.append((lo, win))

    ws = np.array([w for w, _ in items], dtype=np.int64)
    ps = np.array([p for _, p in items], dtype=np.int64)
    for t_cur in reversed(chain[:-1]):
        win = _window_step(win, lo, t_cur, u, ws, ps)
        tally(counter, inst.n * (u + 1))
        lo = t_cur
        if trace is not None:
            trace.append((lo, win))
    return extra + int(win[0])


def _exhaustive_optimum(items, j):
    """Best profit within capacity ``j`` and the fewest item types among optimal solutions."""
    best = (0, 0)

    def walk(i, cap, profit, types):
        nonlocal best
        if i == len(items):
            key = (profit, -types)
            if key > best:
                best = key
            return
        w, p = items[i]
        for m in range(cap // w + 1):
            walk(i + 1, cap - m * w, profit + m * p, types + (m > 0))

    walk(0, j, 0, 0)
    return best[0], -best[1]


def log_types_check(inst, j, max_j=LOG_TYPES_MAX_J, max_n=LOG_TYPES_MAX_N):
    """True iff some optimal solution for capacity ``j`` uses at most log2(j+1) item types.

    Exhaustive search, so only small instances are accepted.
    """
    if j > max_j or inst.n > max_n:
        raise ValidationError(f"instance exceeds the exhaustive-search bound (j<={max_j}, n<={max_n})")
    _, types = _exhaustive_optimum(list(inst.items), j)
    # 2**types distinct sub-multisets must not fit into the j+1 possible weights
    return 2 ** types <= j + 1
