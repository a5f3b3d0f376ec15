# %% [markdown]
# # Change-making for every target at once
#
# Given coin values and a limit t, we want the fewest coins that sum to each
# j in 0..t.  The textbook DP costs n*t.  Here we run all five solvers on the
# same coin set and check they agree.

# %%
import time

import numpy as np

from coinkit.convkit import INF
from coinkit.corekit import dp_all_targets, make_coins, reconstruct_witness, render_cost
from coinkit.heavylight import all_targets_t32, all_targets_t43
from coinkit.topk_dp import algo1_all_targets, tsigma_all_targets

coins = make_coins([1, 5, 10, 25])
print([render_cost(x) for x in dp_all_targets(coins, 12)])

# %% [markdown]
# Coins with a gcd problem leave holes.  {3, 5} cannot make 1, 2, 4 or 7.

# %%
d = dp_all_targets(make_coins([3, 5]), 12)
print("unreachable:", [j for j in range(13) if d[j] == INF])

# %% [markdown]
# A bigger instance: 25 coins up to 500, targets up to 200000.

# %%
rng = np.random.default_rng(1)
coins = make_coins(rng.choice(np.arange(1, 501), size=25, replace=False).tolist() + [500])
t = 200_000
results = {}
for name, fn in [("dp", dp_all_targets), ("t32", all_targets_t32), ("t43", all_targets_t43),
                 ("algo1", algo1_all_targets), ("tsigma", tsigma_all_targets)]:
    fn(coins, 100)  # warm up jitted kernels
    start = time.perf_counter()
    results[name] = fn(coins, t)
    print(f"{name:7s} {time.perf_counter() - start:8.3f}s")

ref = results["dp"]
print("all equal:", all(np.array_equal(r, ref) for r in results.values()))

# %% [markdown]
# The cost array is enough to rebuild an actual multiset of coins.

# %%
j = 199_999
w = reconstruct_witness(ref, coins, j)
print(j, "=", " + ".join(map(str, w[:8])), "..." if len(w) > 8 else "", f"({len(w)} coins)")
