"""Agent-level simulation as an independent check on the closed forms.

Run: python3 demos/04_monte_carlo.py
"""

from peerreview import DynamicPolicy, OneShotPolicy, Population, aggregate
from peerreview.dynamic import aggregate_dynamic
from peerreview.monte_carlo import EffortSource, SimConfig, simulate

pop = Population(0.5, 8.0, 4.0)
cfg = SimConfig(population_size=1_000_000, seed=20240705)

est = simulate(pop, OneShotPolicy(1.0), 1.0, cfg)
print(f"one-shot yield {est.yield_emp:.5f} +- {est.se_yield:.5f} (exact {aggregate(pop, 1.0, 1.0).yield_:.5f})")

policy = DynamicPolicy(1.0, 0.3)
est = simulate(pop, policy, 1.0, cfg)
print(f"dynamic  yield {est.yield_emp:.5f} +- {est.se_yield:.5f} "
      f"(exact {aggregate_dynamic(pop, policy, 1.0).yield_hat:.5f})")
print(f"challenges won/attempted by good papers: {est.challenges_won_high}/{est.challenges_attempted_high}")

# Same seed, different partitioning: identical counts.
split = simulate(pop, policy, 1.0, SimConfig(1_000_000, 20240705, partitions=8), max_workers=4)
print("partition invariant:", split == est)

grid = simulate(pop, policy, 1.0, SimConfig(200_000, 1, effort_source=EffortSource.GRID_ORACLE))
print(f"grid-searched authors: yield {grid.yield_emp:.5f} +- {grid.se_yield:.5f}")
