"""Single-target change-making in O(u log^3 u).

The decision "can ``t`` be written with at most ``m`` coins" becomes "with
exactly ``m`` coins" once 0 is adjoined to the coin set.  By the partition
lemma an ``m``-coin multiset splits into two halves of equal size whose
sums are both within ``2u`` below ``t/2``, plus one or two leftover coins.
So only a window of width about ``4u`` below each target is needed at each
level of the halving recursion.
"""

from dataclasses import dataclass

import numpy as np

from .convkit import INF, boolean_convolve


@dataclass(frozen=True)
class CountWindow:
    """``bits[j - lo]`` is True iff ``j`` is a sum of exactly ``m`` values from coins + {0}."""

    m: int
    t_param: int
    lo: int
    bits: np.ndarray

    def __contains__(self, j):
        return self.lo <= j <= self.t_param and bool(self.bits[j - self.lo])


def window_width(u):
    return 4 * u + 2


def _child_count(m):
    return (m - 1) // 2 if m % 2 else m // 2 - 1


def count_window(coins, m, t_param, counter=None):
    """Exact ``m``-coin reachability over ``[max(0, t_param - 4u - 2), t_param]``.

    ``coins`` is a CoinSet; the value 0 is adjoined internally.
    """
    if m < 0:
        raise ValueError("coin count must be nonnegative")
    u = coins.u
    width = window_width(u)
    one = np.zeros(u + 1, dtype=bool)
    one[0] = True
    one[list(coins.values)] = True

    levels = [(m, t_param)]
    while levels[-1][0] > 1:
        mm, tt = levels[-1]
        levels.append((_child_count(mm), -(-tt // 2)))

    mm, tt = levels.pop()
    lo = max(0, tt - width)
    idx = np.arange(lo, tt + 1)
    bits = idx == 0 if mm == 0 else one[np.minimum(idx, u)] & (idx <= u)
    while levels:
        parent_m, parent_t = levels.pop()
        parent_lo = max(0, parent_t - width)
        base = 2 * lo
        # only offsets up to parent_t - base matter
        keep = parent_t - base + 1
        conv = boolean_convolve(bits, bits, min(keep, 2 * len(bits) - 1), counter)
        for _ in range(1 if parent_m % 2 else 2):
            conv = boolean_convolve(conv, one, min(keep, len(conv) + u), counter)
        out = np.zeros(parent_t - parent_lo + 1, dtype=bool)
        src_lo = parent_lo - base
        take = conv[max(src_lo, 0):]
        start = max(-src_lo, 0)
        n = min(len(take), len(out) - start)
        if n > 0:
            out[start:start + n] = take[:n]
        lo, bits = parent_lo, out
    return CountWindow(m, t_param, lo, bits)


def decide(coins, t, m, counter=None):
    """True iff some multiset of at most ``m`` coins sums to ``t``."""
    if t == 0:
        return m >= 0
    if not coins or m <= 0:
        return False
    return t in count_window(coins, m, t, counter)


def min_coins_single(coins, t, counter=None):
    """Minimum number of coins summing to ``t`` (INF if impossible).

    Targets of at least ``u^2`` are reduced with copies of the largest coin,
    then the count is binary-searched with ``decide``.
    """
    if t == 0:
        return 0
    coins_used = [v for v in coins if v <= t]
    if not coins_used:
        return INF
    u = max(coins_used)
    from .corekit import CoinSet

    coins = CoinSet(tuple(coins_used))
    k = max(-(-(t - u * u + 1) // u), 0)
    tr = t - k * u
    if tr == 0:
        return k
    if not decide(coins, tr, tr, counter):
        return INF
    lo, hi = 0, tr
    while lo < hi:
        mid = (lo + hi) // 2
        if decide(coins, tr, mid, counter):
            hi = mid
        else:
            lo = mid + 1
    return lo + k


def partition_split(seq):
    """Split a multiset into ``(s1, s2, rest)`` as the partition lemma promises.

    ``len(s1) == len(s2)`` equals ``(m-1)/2`` for odd ``m`` and ``m/2 - 1`` for
    even ``m``; ``rest`` holds the one or two leftover elements and both
    ``sum(s1)`` and ``sum(s2)`` are at most ``sum(seq)/2``.
    """
    seq = list(seq)
    m = len(seq)
    if m == 0:
        raise ValueError("empty multiset")
    if m % 2 == 0:
        # set the largest element aside; the remainder has odd size
        big = max(range(m), key=seq.__getitem__)
        rest_seq = seq[:big] + seq[big + 1:]
        s1, s2, rest = partition_split(rest_seq)
        return s1, s2, rest + [seq[big]]

    total = sum(seq)
    h = (m - 1) // 2
    if sum(seq[:h]) > sum(seq[h + 1:]):
        seq.reverse()
    if 2 * sum(seq[h + 1:]) <= total:
        return seq[:h], seq[h + 1:], [seq[h]]
    # slide a window of h elements until the next one would exceed half
    k = 0
    window = sum(seq[:h])
    while True:
        nxt = window - seq[k] + seq[k + h]
        if 2 * nxt > total:
            s1 = seq[k:k + h]
            s0 = seq[k + h]
            s2 = seq[:k] + seq[k + h + 1:]
            return s1, s2, [s0]
        window = nxt
        k += 1
