"""Seeded random instances for benchmarks, demos and tests."""

import random

from .corekit import CoinSet, KnapsackInstance
from .wordbreak import make_instance


def random_coins(rng, n, u, log_uniform=False):
    """``n`` distinct coins in ``[1, u]`` that always include ``u``.

    With ``log_uniform`` the values are spread evenly over dyadic scales
    instead of uniformly over the range.
    """
    n = min(n, u)
    vals = {u}
    while len(vals) < n:
        if log_uniform:
            v = int(round(2 ** rng.uniform(0, u.bit_length() - 1)))
            vals.add(min(max(v, 1), u))
        else:
            vals.add(rng.randint(1, u))
    return CoinSet(tuple(sorted(vals)))


def random_items(rng, n, u, pmax=10 ** 6):
    """Knapsack items with distinct weights in ``[1, u]`` (``u`` included)."""
    ws = sorted(random_coins(rng, n, u).values)
    return KnapsackInstance(tuple((w, rng.randint(1, pmax)) for w in ws))


def random_word_break(rng, n, sigma=2, words=20, max_len=16, planted=0.6):
    """Random text over ``sigma`` letters; a share of the words are cut out of the text."""
    alpha = bytes(range(97, 97 + sigma))
    text = bytes(rng.choice(alpha) for _ in range(n))
    out = set()
    for _ in range(words):
        L = rng.randint(1, max_len)
        if n >= L and rng.random() < planted:
            p = rng.randint(0, n - L)
            out.add(text[p:p + L])
        else:
            out.add(bytes(rng.choice(alpha) for _ in range(L)))
    return make_instance(text, out)


def rng_for(seed, *salt):
    """Independent deterministic stream per (seed, salt...) combination."""
    return random.Random(":".join(map(str, (seed,) + salt)))
