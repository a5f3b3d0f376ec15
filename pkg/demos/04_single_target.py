# %% [markdown]
# # One huge target
#
# For a single target we never build the whole table.  Targets past u^2 are
# reduced with the largest coin.  Then "at most m coins" is decided by
# halving: any m coins split into two equal halves that each sum to at most
# half the total, plus one or two spare coins.  Only a window of about 4u
# sums below the target matters at each level.

# %%
from coinkit.corekit import make_coins
from coinkit.fastsingle import count_window, decide, min_coins_single, partition_split
from coinkit.topk_dp import implicit_all_targets
from coinkit.corekit import implicit_query
from coinkit.work import WorkCounter

seq = [8, 1, 7, 3, 3, 6, 2]
s1, s2, rest = partition_split(seq)
print("split", seq, "->", s1, s2, rest, "half of total:", sum(seq) / 2)

# %%
coins = make_coins([1, 4, 9])
print("12 with <=2 coins:", decide(coins, 12, 2), " <=3 coins:", decide(coins, 12, 3))
w = count_window(coins, 3, 12)
print("window", w.lo, "..", w.t_param, w.bits.astype(int))

# %%
coins = make_coins([97, 131, 200, 255, 300])
ans = implicit_all_targets(coins)
for t in (10 ** 6, 10 ** 8 + 7, 10 ** 15 + 3):
    w = WorkCounter()
    print(t, min_coins_single(coins, t, w), implicit_query(ans, t), "work", w.count)
