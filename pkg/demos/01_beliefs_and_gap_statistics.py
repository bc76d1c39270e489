"""Beliefs, conjugate updates, and the statistics of the reward gap.

A belief state is a product posterior over the two arms' mean rewards.
Everything a policy needs is a derived statistic of the gap D = theta1 -
theta2: the probability the first arm is better, the expected shortfall, the
expected best-arm reward, and the biserial covariance Cov(D, sign D) that
measures residual uncertainty in reward units.
"""

import numpy as np

from banditlab import (
    BeliefState,
    Beta,
    Gaussian,
    Point,
    credible_interval,
    gap_stats,
    interval_overlap,
    update,
)

# A Gaussian arm against a known baseline: the classic one-armed setup.
state = BeliefState(Gaussian(0.0, 1.0), Point(0.0), reward_variance=1.0)
stats = gap_stats(state)
print("one-armed Gaussian prior N(0,1) vs known 0:")
print(f"  P(arm 1 better)     = {stats.p_gt:.6f}")
print(f"  E[max reward]       = {stats.e_max:.6f}")
print(f"  biserial covariance = {stats.cov_biserial:.6f}  (= sqrt(2/pi))")

# Observing rewards tightens the posterior; the covariance shrinks as the
# identity of the better arm becomes clear.
belief = Gaussian(0.0, 1.0)
for reward in (1.3, 0.9, 1.1):
    belief = update(belief, reward, reward_variance=1.0)
    s = gap_stats(BeliefState(belief, Point(0.0), 1.0))
    print(f"  after reward {reward:+.1f}: mean {belief.mean:+.3f}, "
          f"cov {s.cov_biserial:.4f}")

# Bernoulli arms work the same way through Beta posteriors.
print("\ntwo Bernoulli arms, uniform priors:")
pair = BeliefState(Beta(1, 1), Beta(1, 1))
s = gap_stats(pair)
print(f"  E[max(theta1, theta2)] = {s.e_max:.6f}  (= 2/3 for two uniforms)")

# Credible intervals and their overlap are the informal uncertainty picture.
sharp = BeliefState(Beta(42, 18), Beta(24, 36))
iv1 = credible_interval(sharp.arm1, 0.8)
iv2 = credible_interval(sharp.arm2, 0.8)
print("\nafter 60 pulls of each arm (Beta(42,18) vs Beta(24,36)):")
print(f"  80% intervals {np.round(iv1, 3)} and {np.round(iv2, 3)}, "
      f"overlap {interval_overlap(iv1, iv2):.4f}")
print(f"  biserial covariance {gap_stats(sharp).cov_biserial:.5f} "
      "(the formal uncertainty measure)")
