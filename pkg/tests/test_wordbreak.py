import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coinkit.convkit import INF
from coinkit.corekit import CoinSet, ValidationError, dp_all_targets, make_coins
from coinkit.fastsingle import min_coins_single
from coinkit.generate import random_word_break
from coinkit.wordbreak import (
    WordBreakStats,
    audit_scale_trie,
    build_scale_trie,
    jump_query,
    make_instance,
    min_word_break,
    naive_word_break,
    parse_dictionary,
    walk_steps,
)


def test_build_scale_trie_examples():
    tr = build_scale_trie([b"ab", b"ba"], 2, 1)
    assert tr.marked_count == 2 and len(tr.paths) <= 2
    assert audit_scale_trie(tr)
    tr = build_scale_trie([b"a", b"abcd"], 2, 1)
    assert tr.marked_count == 0 and tr.paths == []
    tr = build_scale_trie([b"ab", b"ba", b"bb"], 2, 5)
    assert tr.paths == [] and audit_scale_trie(tr)
    with pytest.raises(ValueError):
        build_scale_trie([b"ab"], 3, 1)


def test_jump_query_examples():
    tr = build_scale_trie([b"a"], 1, 1)
    assert jump_query(tr, b"aaa", 0, [INF, 0]).tolist() == [1]
    # only "ab" lives at scale 2; s[3..4] = "ab" starts after prefix 2
    tr = build_scale_trie([b"ab", b"abab"], 2, 1)
    assert jump_query(tr, b"ababab", 2, [INF, 0, INF, 1]).tolist() == [INF, 2]
    tr = build_scale_trie([], 2, 1)
    assert jump_query(tr, b"ababab", 2, [INF, 0, INF, 1]).tolist() == [INF, INF]
    with pytest.raises(ValueError):
        jump_query(tr, b"ababab", 1, [INF] * 4)


def test_min_word_break_examples():
    assert min_word_break(make_instance("ababab", ["ab", "abab"]))[6] == 2
    assert min_word_break(make_instance("abc", ["ab"]))[3] == INF
    assert min_word_break(make_instance("", ["a"])).tolist() == [0]


def test_naive_examples():
    assert naive_word_break(make_instance("aaab", ["a", "aa", "ab"])) == [0, 1, 1, 2, 2]
    assert naive_word_break(make_instance("ab", ["ab"])) == [0, INF, 1]
    s = naive_word_break(make_instance("a" * 12, ["a", "a" * 4, "a" * 9]))
    assert s[12] == 3 == min_coins_single(make_coins([1, 4, 9]), 12)
    with pytest.raises(ValidationError):
        naive_word_break(make_instance("a" * 100, ["a" * 50]), budget=100)


def test_instance_validation():
    inst = make_instance("ab", ["ab", "ab", "b"])
    assert inst.words == (b"ab", b"b")
    with pytest.raises(ValidationError):
        make_instance("ab", ["ab", ""])


def test_parse_dictionary():
    assert parse_dictionary(b"ab\nabab\n") == [b"ab", b"abab"]
    assert parse_dictionary(b"ab\nabab") == [b"ab", b"abab"]
    assert parse_dictionary(b"a b\r\n") == [b"a b\r"]
    with pytest.raises(ValidationError, match="line 2"):
        parse_dictionary(b"ab\n\nba\n")


@pytest.mark.parametrize("sigma", [1, 2, 4, 26])
def test_random_oracle_equivalence(sigma):
    rng = random.Random(sigma)
    for _ in range(15):
        inst = random_word_break(rng, rng.randint(0, 800), sigma, rng.randint(1, 30), rng.choice([4, 16, 40]))
        lam = rng.choice([None, 1, 2])
        assert min_word_break(inst, lam=lam).tolist() == naive_word_break(inst)


def test_unary_matches_change_making():
    rng = random.Random(5)
    for _ in range(20):
        coins = make_coins({rng.randint(1, 50) for _ in range(rng.randint(1, 6))})
        n = rng.randint(0, 1500)
        inst = make_instance(b"a" * n, [b"a" * v for v in coins])
        assert np.array_equal(min_word_break(inst), dp_all_targets(coins, n))


def test_instrumentation():
    rng = random.Random(8)
    for lam in (1, 2, 3, None):
        inst = random_word_break(rng, 600, 2, 40, 20)
        stats = WordBreakStats()
        s = min_word_break(inst, lam=lam, stats=stats, check_finality=True)
        assert s.tolist() == naive_word_break(inst)
        assert stats.walks_bounded()
        assert stats.queries > 0
    stats = WordBreakStats()
    inst = make_instance(b"ab" * 300, [b"ab", b"abab", b"ba", b"bab", b"abababab", b"babababa"])
    min_word_break(inst, lam=1, stats=stats)
    assert stats.path_requests > 0


words = st.lists(st.binary(min_size=1, max_size=12).map(lambda b: bytes(97 + x % 3 for x in b)), min_size=1, max_size=30)


@given(words, st.integers(1, 4))
def test_path_audit(ws, lam):
    for q in (1, 2, 4, 8):
        tr = build_scale_trie(ws, q, lam)
        assert audit_scale_trie(tr)
        for v in range(len(tr.children)):
            assert walk_steps(tr, v) <= 2 * lam


@given(words, st.binary(max_size=200).map(lambda b: bytes(97 + x % 3 for x in b)), st.integers(1, 3))
def test_property_oracle(ws, text, lam):
    inst = make_instance(text, ws)
    assert min_word_break(inst, lam=lam).tolist() == naive_word_break(inst)
