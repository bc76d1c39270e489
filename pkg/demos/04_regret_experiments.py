"""Reproducible Monte Carlo regret comparisons.

Each trial draws a true environment from the prior, plays a policy, and
records both the realized regret and the conditional expected regret r of
each action distribution.  Trials use per-index random substreams, so runs
are bit-reproducible at any chunking or thread count, and the accumulated
squared terms back the cumulative-regret bound R_T <= sqrt(T * sum r^2).
"""

import math

from banditlab import (
    BeliefState,
    Beta,
    FixAdapter,
    Gaussian,
    Point,
    R2OneArmAdapter,
    R2TableAdapter,
    TSAdapter,
    build_benefit_table,
    run_batch,
)

SEED = 20250809

# One-armed Gaussian race at a small desk scale.
prior = BeliefState(Gaussian(0.0, 1.0), Point(0.0), reward_variance=1.0)
for policy in (TSAdapter(), R2OneArmAdapter()):
    res = run_batch(prior, policy, horizon=300, family="gaussian",
                    n_trials=4000, master_seed=SEED)
    curve = res.curve()
    check = res.bound_check()
    print(f"gaussian {policy.name:>3}: final regret "
          f"{curve.mean_cum[-1]:6.3f} +- {1.96 * curve.stderr[-1]:.3f}   "
          f"bound R_T={check.lhs:.2f} <= {check.rhs:.2f} "
          f"({'ok' if check.ok else 'violated'})")

# Bernoulli race: posterior sampling vs the DP policy vs the shutdown fix.
prior_b = BeliefState(Beta(1, 1), Beta(1, 1))
table = build_benefit_table((1.0, 1.0, 1.0, 1.0), m_bar=30)
for policy in (TSAdapter(), R2TableAdapter(table), FixAdapter()):
    res = run_batch(prior_b, policy, horizon=15, family="bernoulli",
                    n_trials=20000, master_seed=SEED)
    curve = res.curve()
    print(f"bernoulli {policy.name:>8}: final regret "
          f"{curve.mean_cum[-1]:.4f} +- {1.96 * curve.stderr[-1]:.4f}   "
          f"total squared r = {res.squared_regret_estimate():.4f}")

print("\nre-running the first race with 4 threads reproduces it bit-exactly:")
a = run_batch(prior_b, TSAdapter(), 15, "bernoulli", 20000, SEED)
b = run_batch(prior_b, TSAdapter(), 15, "bernoulli", 20000, SEED, threads=4)
print(f"  identical accumulators: "
      f"{(a.accum.sum_cum == b.accum.sum_cum).all()}")
