# %% [markdown]
# # Word break
#
# Fewest dictionary words whose concatenation is each prefix of a text.
# With a one-letter alphabet a word is just its length, so this is
# change-making again.

# %%
from coinkit.corekit import dp_all_targets, make_coins, render_cost
from coinkit.generate import random_word_break, rng_for
from coinkit.wordbreak import WordBreakStats, build_scale_trie, make_instance, min_word_break, naive_word_break

inst = make_instance("ababab", ["ab", "abab"])
print([render_cost(x) for x in min_word_break(inst)])

# %%
n = 40
unary = make_instance(b"a" * n, [b"a" * 4, b"a" * 9])
print(min_word_break(unary)[n], dp_all_targets(make_coins([4, 9]), n)[n])

# %% [markdown]
# Each length scale [q, 2q-1] gets a trie of reversed words.  Disjoint
# downward paths carrying lam word-ends each let a query stop early and hand
# the rest of the root path to one convolution.

# %%
tr = build_scale_trie([b"ab", b"aab", b"bab", b"abb", b"bbab"], 2, 2)
print("marked:", tr.marked_count, "paths:", [p.nodes for p in tr.paths])

# %%
inst = random_word_break(rng_for(2, "demo"), 3000, sigma=2, words=60, max_len=12, planted=0.9)
stats = WordBreakStats()
s = min_word_break(inst, stats=stats)
print("S[n] =", render_cost(s[-1]), "| naive agrees:", s.tolist() == naive_word_break(inst))
print("longest walk per scale:", stats.max_walk, "lam:", stats.lam)
