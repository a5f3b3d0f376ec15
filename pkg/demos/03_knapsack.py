# %% [markdown]
# # Unbounded knapsack
#
# Same tricks, with max-profit instead of min-count.  Items are ranked by
# profit per unit weight; capacity j looks at the ceil(3u^2/j) best ones.

# %%
import time

from coinkit.corekit import KnapsackInstance, dp_all_capacities
from coinkit.generate import random_items, rng_for
from coinkit.knapsack import algo2_all_capacities, rank_items, single_capacity_nu, tsigma_all_capacities

inst = KnapsackInstance(((2, 3), (3, 5)))
print(algo2_all_capacities(inst, 7).tolist())

# %%
inst = random_items(rng_for(3, "demo"), 30, 200)
print("best ratio items:", rank_items(inst)[:3])
t = 300_000
for name, fn in [("dp", dp_all_capacities), ("algo2", algo2_all_capacities), ("tsigma", tsigma_all_capacities)]:
    fn(inst, 10)
    start = time.perf_counter()
    d = fn(inst, t)
    print(f"{name:7s} {time.perf_counter() - start:.3f}s  D[t] = {d[t]}")

# %% [markdown]
# One capacity only: reduce with the best-ratio item, then walk windows of
# width u+1 down a chain of shrinking capacities.  Capacity 10^12 is fine.

# %%
trace = []
print(single_capacity_nu(inst, t), "(windowed)")
big = 10 ** 12
start = time.perf_counter()
print(single_capacity_nu(inst, big, trace=trace), f"at capacity 10^12 in {time.perf_counter() - start:.3f}s,",
      len(trace), "windows")
