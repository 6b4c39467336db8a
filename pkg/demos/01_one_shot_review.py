"""One-shot review: how a journal's acceptance threshold shapes author effort.

Run: python3 demos/01_one_shot_review.py
"""

from peerreview import Population, aggregate, best_effort, capacity_threshold
from peerreview.one_shot import one_shot_equilibrium, unconstrained_threshold

pop = Population(alpha=0.5, theta_skilled=8.0, theta_unskilled=4.0)
sigma = 1.0
print(f"average effort cost c_bar = {pop.c_bar}")

# Authors respond to the acceptance-rate gap between good and bad papers.
for z in (0.0, 0.5, 1.0, 2.0, 5.0):
    hi, lo = best_effort(8.0, z, sigma), best_effort(4.0, z, sigma)
    print(f"z_bar={z:4.1f}  effort skilled={hi.effort:.4f}  unskilled={lo.effort:.4f}"
          f"{'  (corner)' if lo.corner else ''}")

# With capacity n the journal sets yield equal to n.
n = 0.3125
z = capacity_threshold(pop, sigma, n)
o = aggregate(pop, z, sigma)
print(f"\ncapacity {n}: z_bar={z:.6f} beta={o.beta:.6f} impact={o.impact:.6f} yield={o.yield_:.6f}")

opt = unconstrained_threshold(pop, sigma)
print(f"impact-maximizing threshold without capacity: {opt.z_bar:.6f} (impact {opt.impact:.6f})")
for cap in (0.2, 0.3125, 0.45, 0.6):
    eq = one_shot_equilibrium(pop, sigma, cap)
    print(f"n={cap:<6} branch={eq.branch:<13} z_bar={eq.z_bar:.6f} impact={eq.outcome.impact:.6f}")
