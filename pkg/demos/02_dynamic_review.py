"""Dynamic review: rejected authors may pay a cost kappa to be re-reviewed.

Run: python3 demos/02_dynamic_review.py
"""

from peerreview import DynamicPolicy, Population, aggregate
from peerreview.dynamic import aggregate_dynamic, classify_policy, optimize_policy
from peerreview.one_shot import one_shot_equilibrium

pop = Population(0.5, 8.0, 4.0)
sigma = 1.0

o = aggregate_dynamic(pop, DynamicPolicy(z_bar=1.0, kappa=0.3), sigma)
print(f"z_bar=1, kappa=0.3: regime={o.regime.value} yield={o.yield_hat:.6f} "
      f"(one-shot {aggregate(pop, 1.0, sigma).yield_:.6f}, gain {o.delta:.6f})")
print(f"challenges: high-quality {o.challenge_high}, low-quality {o.challenge_low}")

print("\nregimes along kappa at z_bar = 1:")
for kappa in (0.05, 0.2, 0.5, 0.9):
    out = aggregate_dynamic(pop, DynamicPolicy(1.0, kappa), sigma)
    print(f"kappa={kappa:<4} {classify_policy(1.0, kappa, sigma).value:<9} "
          f"skilled effort={out.effort_skilled:.4f}")

n = 0.3125
policy, best = optimize_policy(pop, sigma, n)
base = one_shot_equilibrium(pop, sigma, n)
print(f"\nbest policy at capacity {n}: z_bar={policy.z_bar:.5f} kappa={policy.kappa:.5f} "
      f"({best.regime.value})")
print(f"impact {best.impact_hat:.6f} against one-shot {base.outcome.impact:.6f}")
