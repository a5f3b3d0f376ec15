import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coinkit.convkit import INF
from coinkit.corekit import CoinSet, ValidationError, dp_all_targets, frobenius_brute, make_coins
from coinkit.topk_dp import (
    adversarial_family,
    algo1_all_targets,
    erdos_graham_bound,
    icbrt_ceil,
    rank_coins,
    topk_index_bound,
    tsigma_all_targets,
)
from coinkit.work import WorkCounter


def test_algo1_examples():
    c = make_coins([1, 5, 10, 25])
    assert np.array_equal(algo1_all_targets(c, 200), dp_all_targets(c, 200))
    assert algo1_all_targets(make_coins([3, 5]), 8).tolist() == [0, INF, INF, 1, INF, 1, 2, INF, 2]
    assert algo1_all_targets(c, 0).tolist() == [0]


def test_topk_index_bound_examples():
    assert topk_index_bound(5, 25, 10) == 2
    assert topk_index_bound(5, 1, 3) == 3
    assert topk_index_bound(10, 40, 10) == 5
    with pytest.raises(ValueError):
        topk_index_bound(5, 0, 3)


def test_tsigma_examples():
    c = make_coins([2, 3, 97])
    assert np.array_equal(tsigma_all_targets(c, 300), dp_all_targets(c, 300))
    small = make_coins([2, 3])
    assert np.array_equal(tsigma_all_targets(small, 500), algo1_all_targets(small, 500))
    heavy = make_coins([90, 97])
    assert np.array_equal(tsigma_all_targets(heavy, 20), dp_all_targets(heavy, 20))


def test_erdos_graham_examples():
    assert erdos_graham_bound([5, 3], 2) == 7
    assert erdos_graham_bound([6, 4], 2) == 2
    assert erdos_graham_bound([10, 9, 8], 3) == 44
    with pytest.raises(ValueError):
        erdos_graham_bound([5, 3], 1)


def test_icbrt_ceil():
    for x in range(0, 3000):
        c = icbrt_ceil(x)
        assert c ** 3 >= x and (c == 0 or (c - 1) ** 3 < x)
    assert icbrt_ceil(10 ** 30) == 10 ** 10


def test_adversarial_family():
    c = adversarial_family(100, 5)
    assert c.values == (25, 50, 75, 99, 100)
    for u in (30, 77, 100):
        for k in range(2, 9):
            c = adversarial_family(u, k)
            assert np.array_equal(algo1_all_targets(c, 4000), dp_all_targets(c, 4000))
    with pytest.raises(ValidationError):
        adversarial_family(10, 1)


def test_random_oracle_equivalence():
    rng = random.Random(2)
    for _ in range(100):
        u = rng.randint(1, 100)
        t = rng.randint(0, 10 ** 4)
        coins = make_coins({rng.randint(1, u) for _ in range(rng.randint(1, 20))})
        want = dp_all_targets(coins, t)
        assert np.array_equal(algo1_all_targets(coins, t), want)
        assert np.array_equal(tsigma_all_targets(coins, t), want)


coin_sets = st.lists(st.integers(1, 40), min_size=1, max_size=12).map(make_coins)


@given(coin_sets, st.integers(1, 12))
def test_k_largest_law(coins, k):
    # restricting target j >= ceil(2u^2/k) to the k largest coins loses nothing
    u = coins.u
    t = 3 * u * u
    d = dp_all_targets(coins, t)
    top = rank_coins(coins)[:k]
    for j in range(-(-2 * u * u // k), t + 1):
        if d[j] < INF:
            assert min(d[j - v] for v in top if v <= j) + 1 == d[j]


@given(st.lists(st.integers(1, 120), min_size=2, max_size=8, unique=True))
def test_erdos_graham_law(vals):
    vals = sorted(vals, reverse=True)
    g = math.gcd(*vals)
    scaled = make_coins([v // g for v in vals])
    f = frobenius_brute(scaled)
    bound = erdos_graham_bound(vals, len(vals))
    # frobenius number of the gcd-scaled set, measured back in original units
    assert f is None or f * g <= bound


def test_harmonic_work_bound():
    rng = random.Random(4)
    for _ in range(20):
        u = rng.randint(2, 300)
        t = rng.randint(1, 200000)
        coins = make_coins({rng.randint(1, u) for _ in range(rng.randint(1, 60))} | {u})
        c = WorkCounter()
        algo1_all_targets(coins, t, c)
        assert c.count <= 8 * (u * u * math.log(u + 1) + t)
