# %% [markdown]
# # Why looking at the largest coins is enough
#
# Past a certain point every multiple of the gcd is representable by the k
# largest coins (the Erdos-Graham bound).  That is what lets target j scan
# only the ceil(2u^2/j) largest coins.

# %%
import math

from coinkit.corekit import dp_all_targets, frobenius_brute, make_coins
from coinkit.topk_dp import adversarial_family, algo1_all_targets, erdos_graham_bound, topk_index_bound
from coinkit.work import WorkCounter

for a, b in [(3, 5), (7, 11), (12, 25)]:
    print(f"Frobenius({a},{b}) = {frobenius_brute(make_coins([a, b]))}, ab-a-b = {a * b - a - b}")

# %%
vals = [10, 9, 8]
print("largest gap:", frobenius_brute(make_coins(vals)), "bound:", erdos_graham_bound(vals, 3))

# %% [markdown]
# How many coins target j looks at with u = 100 and 40 coins.

# %%
for j in (1, 100, 1000, 5000, 20000):
    print(j, topk_index_bound(100, j, 40))

# %% [markdown]
# The set {x, 2x, ..., (k-1)x, (k-1)x - 1} keeps the gaps large for a long
# time.  algo1 still matches the plain DP on it, and its work counter grows
# like u^2 log u + t rather than n t.

# %%
for k in (3, 5, 8):
    c = adversarial_family(300, k)
    t = 100_000
    w = WorkCounter()
    same = (algo1_all_targets(c, t, w) == dp_all_targets(c, t)).all()
    print(c.values, "match:", bool(same), "work:", w.count, "n*t:", c.n * t,
          "ratio to u^2 ln u + t: %.2f" % (w.count / (c.u ** 2 * math.log(c.u) + t)))
