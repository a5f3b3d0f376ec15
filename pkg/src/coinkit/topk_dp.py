"""All-targets change-making that only looks at the few largest coins.

For target ``j`` some optimal solution uses one of the ``ceil(2 u^2 / j)``
largest coins (a consequence of the Erdos-Graham bound on Frobenius
numbers), so the textbook recurrence can skip the rest.  Summed over ``j``
that is a harmonic series, ``O(u^2 log u + t)`` in total.
"""

import math
from functools import reduce

import numpy as np
from numba import njit

from .convkit import INF
from .corekit import CoinSet, ImplicitCostAnswer, ValidationError
from .work import tally


def rank_coins(coins):
    """Coin values sorted strictly decreasing."""
    return tuple(sorted(coins, reverse=True))


def topk_index_bound(u, j, n):
    """How many of the largest coins target ``j`` must look at: min(n, ceil(2u^2/j))."""
    if j < 1:
        raise ValueError("j must be positive")
    return min(n, (2 * u * u + j - 1) // j)


@njit(cache=True)
def _topk_min_dp(vals, t, bound):
    d = np.full(t + 1, INF, dtype=np.int64)
    d[0] = 0
    n = vals.shape[0]
    two_u2 = 2 * bound * bound
    work = 0
    for j in range(1, t + 1):
        k = min(n, (two_u2 + j - 1) // j)
        best = INF
        for i in range(k):
            v = vals[i]
            if v <= j and d[j - v] < best:
                best = d[j - v]
        work += k
        if best < INF:
            d[j] = best + 1
    return d, work


def algo1_all_targets(coins, t, counter=None, bound=None):
    """Minimum coin counts for ``0..t`` scanning only the top ``ceil(2u^2/j)`` coins.

    ``bound`` replaces ``u`` in the scan limit; it must be at least the
    largest coin.
    """
    u = coins.u if bound is None else bound
    if coins and u < coins.u:
        raise ValueError("bound must be at least the largest coin")
    vals = np.array(rank_coins(coins), dtype=np.int64)
    d, work = _topk_min_dp(vals, t, u)
    tally(counter, work)
    return d


@njit(cache=True)
def _add_heavy_min(d, heavy):
    t = d.shape[0] - 1
    for j in range(1, t + 1):
        best = d[j]
        for v in heavy:
            if v <= j and d[j - v] + 1 < best:
                best = d[j - v] + 1
        d[j] = best
    return d


def icbrt_ceil(x):
    """Smallest integer c >= 0 with c**3 >= x."""
    c = int(round(x ** (1 / 3))) if x > 0 else 0
    while c ** 3 < x:
        c += 1
    while c > 0 and (c - 1) ** 3 >= x:
        c -= 1
    return c


def tsigma_all_targets(coins, t, counter=None):
    """All-targets change-making in about (t sigma)^(2/3) + t time.

    Coins up to ``ceil((t sigma)^(1/3))`` go through ``algo1_all_targets``;
    the remaining heavy coins are few and are added by one ascending pass.
    """
    ell0 = max(1, icbrt_ceil(t * coins.sigma))
    light = CoinSet(tuple(v for v in coins if v <= ell0))
    heavy = np.array([v for v in coins if v > ell0], dtype=np.int64)
    d = algo1_all_targets(light, t, counter, bound=ell0)
    if len(heavy):
        _add_heavy_min(d, heavy)
        tally(counter, t * len(heavy))
    return d


def implicit_all_targets(coins, counter=None):
    """Implicit answer for every target: counts below ``u^2`` plus the largest coin."""
    u = coins.u
    prefix = algo1_all_targets(coins, max(u * u - 1, 0), counter)
    return ImplicitCostAnswer(prefix, u)


def erdos_graham_bound(values_desc, k):
    """Bound above which every multiple of d is representable by the k largest values.

    ``d`` is the gcd of those values; the bound is ``2 floor(v1/(d k)) v2 - v1``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    vals = sorted(values_desc, reverse=True)
    if k > len(vals):
        raise ValueError(f"k={k} exceeds the number of values {len(vals)}")
    top = vals[:k]
    d = reduce(math.gcd, top)
    return 2 * (top[0] // (d * k)) * top[1] - top[0]


def adversarial_family(u, k):
    """The coin set {x, 2x, ..., (k-1)x, (k-1)x - 1} with x = ceil(u/(k-1))."""
    if k < 2:
        raise ValidationError("k must be at least 2")
    x = -(-u // (k - 1))
    vals = {x * i for i in range(1, k)} | {(k - 1) * x - 1}
    return CoinSet(tuple(sorted(v for v in vals if v > 0)))
