"""All-targets change-making by splitting coins into heavy and light ones.

Heavy coins (value > ell0) are few per target, so their min counts come
from iterated boolean convolutions.  Light coins are added either by plain
DP (``all_targets_t32``) or group by group with blocked binary
(min,+)-convolutions (``all_targets_t43``).
"""

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from . import convkit
from .convkit import INF, _selected_sparse, boolean_convolve
from .corekit import CoinSet, relax_coin
from .work import tally

@dataclass(frozen=True)
class HeavyLightSplit:
    ell0: int
    heavy: CoinSet
    light: CoinSet


@dataclass(frozen=True)
class LightGroup:
    """Coins with values in ``(ell, 2*ell]``."""

    ell: int
    members: tuple


def split_coins(coins, ell0):
    heavy = tuple(v for v in coins if v > ell0)
    light = tuple(v for v in coins if v <= ell0)
    return HeavyLightSplit(ell0, CoinSet(heavy), CoinSet(light))


def light_groups(light, ell0):
    """Groups ``(ell, 2 ell]`` for ell = 1, 2, 4, ... below ``ell0``; coin 1 is left out."""
    groups = []
    ell = 1
    while ell < ell0:
        members = tuple(v for v in light if ell < v <= 2 * ell)
        groups.append(LightGroup(ell, members))
        ell *= 2
    return groups


def heavy_min_counts(heavy, t, kmax, counter=None):
    """Fewest heavy coins (at most ``kmax``) summing to each target in ``0..t``."""
    d = np.full(t + 1, INF, dtype=np.int64)
    d[0] = 0
    if not heavy or kmax <= 0:
        return d
    one = np.zeros(t + 1, dtype=bool)
    one[[v for v in heavy if v <= t]] = True
    cur = np.zeros(t + 1, dtype=bool)
    cur[0] = True
    for k in range(1, kmax + 1):
        cur = boolean_convolve(cur, one, t + 1, counter=counter)
        if not cur.any():
            break
        d[cur & (d == INF)] = k
    return d


def all_targets_t32(coins, t, counter=None):
    """Heavy coins by convolution with ell0 ~ sqrt(t), light coins by DP."""
    ell0 = max(1, math.isqrt(t))
    split = split_coins(coins, ell0)
    d = heavy_min_counts(split.heavy, t, t // ell0, counter)
    for v in split.light:
        relax_coin(d, v)
        tally(counter, t + 1)
    return d


@njit(cache=True)
def _add_group_sparse(d, bpos, ell, t):
    lb = ell + 1
    work = 0
    for i in range(1, t // ell + 1):
        start = ell * i
        stop = min(start + ell, t + 1)
        lo = max(0, ell * (i - 2))
        wanted = np.arange(start - lo - ell, stop - lo - ell)
        conv = np.full(stop - start, INF, dtype=np.int64)
        work += _selected_sparse(d[lo:start], bpos, lb, wanted, conv)
        for j in range(stop - start):
            if conv[j] < d[start + j]:
                d[start + j] = conv[j]
    return work


def add_light_group(d, group, t, counter=None):
    """Extend the min-count array ``d`` (in place) with the coins of ``group``.

    Block ``i`` covers targets ``[ell*i, ell*(i+1) - 1]``.  Its new values are
    the minimum of the old ones and a selected-entry binary (min,+)-convolution
    of the finished window ``[ell*(i-2), ell*i - 1]`` with the group indicator.
    A coin in ``(ell, 2 ell]`` taken out of a target in block ``i`` always
    lands in that window.
    """
    ell = group.ell
    if not group.members:
        return d
    bpos = np.array(sorted(v - ell for v in group.members), dtype=np.int64)
    if len(bpos) <= convkit.SPARSE_LIMIT:
        tally(counter, _add_group_sparse(d, bpos, ell, t))
        return d
    bvec = np.full(ell + 1, INF, dtype=np.int64)
    bvec[bpos] = 1
    for i in range(1, t // ell + 1):
        start = ell * i
        stop = min(start + ell, t + 1)
        lo = max(0, ell * (i - 2))
        wanted = np.arange(start, stop, dtype=np.int64) - lo - ell
        conv = convkit._selected(d[lo:start], bvec, wanted, counter)
        np.minimum(d[start:stop], conv, out=d[start:stop])
    return d


def choose_ell0(t, u):
    """Power-of-two threshold near t^(2/3), capped just above the largest coin."""
    e = 0
    while (1 << (3 * e)) < t * t:
        e += 1
    cap = 1 << u.bit_length()
    return max(1, min(1 << e, cap))


def all_targets_t43(coins, t, counter=None, ell0=None):
    """All-targets change-making in roughly t^(4/3) time.

    ``ell0`` overrides the heavy/light threshold; the result does not depend
    on it, only the running time does.
    """
    if ell0 is None:
        ell0 = choose_ell0(t, coins.u)
    split = split_coins(coins, ell0)
    d = heavy_min_counts(split.heavy, t, t // ell0, counter)
    if 1 in split.light.values:
        relax_coin(d, 1)
        tally(counter, t + 1)
    for group in light_groups(split.light, ell0):
        add_light_group(d, group, t, counter)
    return d
