"""Instances, baseline dynamic programs, brute-force oracles and witnesses.

Cost arrays are ``int64`` numpy arrays indexed by target, with
``convkit.INF`` marking infeasible targets.  Profit arrays are ``int64``
arrays indexed by capacity.
"""

import math
from collections import deque
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .convkit import INF
from .work import tally

ORACLE_BOUND = 10**4
FROBENIUS_BOUND = 200
# profits above this would leave no headroom in int64 arithmetic
PROFIT_LIMIT = 1 << 62


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class CoinSet:
    """Distinct positive coin values in increasing order.

    An empty ``values`` tuple is the marker for "every coin was pruned";
    only target 0 is feasible then.
    """

    values: tuple

    @property
    def n(self):
        return len(self.values)

    @property
    def u(self):
        return self.values[-1] if self.values else 0

    @property
    def sigma(self):
        return sum(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __bool__(self):
        return bool(self.values)


@dataclass(frozen=True)
class KnapsackInstance:
    """Items as ``(weight, profit)`` pairs with pairwise distinct weights."""

    items: tuple

    @property
    def n(self):
        return len(self.items)

    @property
    def u(self):
        return max((w for w, _ in self.items), default=0)

    @property
    def sigma(self):
        return sum(w for w, _ in self.items)

    def __len__(self):
        return len(self.items)


@dataclass(frozen=True)
class ImplicitCostAnswer:
    """Minimum coin counts for targets ``[0, u*u)`` plus the largest coin."""

    prefix: np.ndarray
    u: int


def _check_int(x, what):
    if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
        raise ValidationError(f"{what} must be an integer, got {x!r}")
    return int(x)


def make_coins(values):
    """Build a CoinSet from any iterable of positive integers (deduplicated)."""
    vals = [_check_int(v, "coin value") for v in values]
    for v in vals:
        if v <= 0:
            raise ValidationError(f"coin value must be positive, got {v}")
    return CoinSet(tuple(sorted(set(vals))))


def normalize_coins(raw, t):
    """Deduplicate, validate and drop coins larger than the target ``t``."""
    raw = list(raw)
    t = _check_int(t, "target")
    if not raw:
        raise ValidationError("coin list is empty")
    if t < 0:
        raise ValidationError(f"target must be nonnegative, got {t}")
    coins = make_coins(raw)
    return CoinSet(tuple(v for v in coins.values if v <= t))


def normalize_items(raw, t):
    """Validate ``(weight, profit)`` pairs, keep the best profit per weight, prune weight > t."""
    raw = list(raw)
    t = _check_int(t, "capacity")
    if not raw:
        raise ValidationError("item list is empty")
    if t < 0:
        raise ValidationError(f"capacity must be nonnegative, got {t}")
    best = {}
    for pair in raw:
        if len(pair) != 2:
            raise ValidationError(f"item must be a (weight, profit) pair, got {pair!r}")
        w = _check_int(pair[0], "weight")
        p = _check_int(pair[1], "profit")
        if w <= 0 or p <= 0:
            raise ValidationError(f"weight and profit must be positive, got {(w, p)}")
        if w <= t and p > best.get(w, 0):
            best[w] = p
    return KnapsackInstance(tuple(sorted(best.items())))


def relax_coin(d, v):
    """Add unlimited copies of coin ``v`` to the min-count array ``d`` in place.

    Along each residue class mod ``v`` the update ``d[j] = min(d[j], d[j-v]+1)``
    is a running minimum of ``d[k] - k`` shifted back by ``k``.
    """
    t1 = len(d)
    if v >= t1:
        return d
    rows = -(-t1 // v)
    grid = np.full(rows * v, INF, dtype=np.int64)
    grid[:t1] = d
    grid = grid.reshape(rows, v)
    k = np.arange(rows, dtype=np.int64)[:, None]
    best = np.minimum.accumulate(grid - k, axis=0) + k
    d[:] = np.minimum(best.reshape(-1)[:t1], INF)
    return d


def relax_item(d, w, p):
    """Add unlimited copies of item ``(w, p)`` to the max-profit array ``d`` in place."""
    t1 = len(d)
    if w >= t1:
        return d
    rows = -(-t1 // w)
    grid = np.full(rows * w, -PROFIT_LIMIT, dtype=np.int64)
    grid[:t1] = d
    grid = grid.reshape(rows, w)
    k = np.arange(rows, dtype=np.int64)[:, None] * p
    best = np.maximum.accumulate(grid - k, axis=0) + k
    d[:] = best.reshape(-1)[:t1]
    return d


def dp_all_targets(coins, t, counter=None):
    """Minimum number of coins for every target ``0..t`` (O(n t))."""
    d = np.full(t + 1, INF, dtype=np.int64)
    d[0] = 0
    for v in coins:
        relax_coin(d, v)
        tally(counter, t + 1)
    return d


def check_profit_range(inst, t):
    if inst.items and t * max(p for _, p in inst.items) >= PROFIT_LIMIT:
        raise OverflowError("profits could exceed the int64 range at this capacity")


def dp_all_capacities(inst, t, counter=None):
    """Maximum profit with total weight at most ``j`` for every ``j`` in ``0..t``."""
    check_profit_range(inst, t)
    d = np.zeros(t + 1, dtype=np.int64)
    for w, p in inst.items:
        relax_item(d, w, p)
        tally(counter, t + 1)
    return d


def brute_force_all_targets(coins, t, bound=ORACLE_BOUND):
    """Breadth-first search over exact sums; returns a list of counts (INF if unreachable)."""
    if t > bound:
        raise ValidationError(f"target {t} exceeds the oracle bound {bound}")
    dist = [INF] * (t + 1)
    dist[0] = 0
    frontier = deque([0])
    while frontier:
        s = frontier.popleft()
        for v in coins:
            nxt = s + v
            if nxt <= t and dist[nxt] == INF:
                dist[nxt] = dist[s] + 1
                frontier.append(nxt)
    return dist


def brute_force_min_coins(coins, j, bound=ORACLE_BOUND):
    return brute_force_all_targets(coins, j, bound)[j]


def frobenius_brute(coins, bound=FROBENIUS_BOUND):
    """Largest integer not representable by ``coins``, or None if there is none.

    Scans representability upward until ``u`` consecutive representable
    values appear; from there on everything is representable.
    """
    vals = list(coins)
    if not vals:
        raise ValidationError("empty coin set")
    u = max(vals)
    if u > bound:
        raise ValidationError(f"largest coin {u} exceeds the scan bound {bound}")
    if reduce(math.gcd, vals) != 1:
        raise ValidationError("Frobenius number undefined: gcd of coins is not 1")
    rep = [True]
    last_gap = None
    run = 1
    x = 0
    while run < u:
        x += 1
        ok = any(x >= v and rep[x - v] for v in vals)
        rep.append(ok)
        if ok:
            run += 1
        else:
            run = 0
            last_gap = x
    return last_gap


def reconstruct_witness(d, coins, j):
    """Back-walk a correct cost array into a multiset (list, largest first) summing to ``j``."""
    if d[j] >= INF:
        raise ValidationError(f"target {j} is infeasible")
    vals = sorted(coins, reverse=True)
    out = []
    while j > 0:
        for v in vals:
            if v <= j and d[j - v] == d[j] - 1:
                out.append(v)
                j -= v
                break
        else:
            raise ValueError(f"corrupt cost array: no coin decrements entry {j}")
    return out


def reconstruct_knapsack_witness(d, inst, j):
    """Back-walk a correct profit array into a list of items fitting capacity ``j``."""
    out = []
    while d[j] > 0:
        if j > 0 and d[j - 1] == d[j]:
            j -= 1
            continue
        for w, p in inst.items:
            if w <= j and d[j - w] + p == d[j]:
                out.append((w, p))
                j -= w
                break
        else:
            raise ValueError(f"corrupt profit array at capacity {j}")
    return out


def implicit_query(ans, j):
    """Answer target ``j`` from the implicit representation in O(1)."""
    u = ans.u
    if u == 0:
        return 0 if j == 0 else INF
    k = max(-(-(j - u * u + 1) // u), 0)
    base = int(ans.prefix[j - k * u])
    return INF if base >= INF else base + k


def render_cost(x):
    """Text rendering: -1 for infeasible."""
    return -1 if x >= INF else int(x)


def json_cost(x):
    return None if x >= INF else int(x)
