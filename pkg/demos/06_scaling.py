# %% [markdown]
# # Work counters instead of stopwatches
#
# Wall time depends on the machine.  Every solver can count its inner work
# (DP cell updates, convolution output entries, kernel scan steps), and the
# growth of those counts is what we compare.

# %%
import math

import numpy as np

from coinkit.corekit import dp_all_targets
from coinkit.generate import random_coins, rng_for
from coinkit.heavylight import all_targets_t43
from coinkit.topk_dp import algo1_all_targets
from coinkit.work import WorkCounter

sizes = [1 << 10, 1 << 12, 1 << 14]
work = []
for t in sizes:
    coins = random_coins(rng_for(0, "t43", t), 2 * t.bit_length(), t, log_uniform=True)
    w = WorkCounter()
    all_targets_t43(coins, t, w)
    work.append(w.count)
    print(t, w.count)
print("log-log slope: %.3f" % np.polyfit(np.log(sizes), np.log(work), 1)[0])

# %% [markdown]
# algo1 with u fixed: work grows linearly in t.

# %%
coins = random_coins(rng_for(0, "algo1"), 40, 200)
for t in (10 ** 4, 10 ** 5, 10 ** 6):
    w, wd = WorkCounter(), WorkCounter()
    algo1_all_targets(coins, t, w)
    dp_all_targets(coins, t, wd)
    print(t, w.count, wd.count, "%.2f" % (w.count / (200 ** 2 * math.log(200) + t)))
