"""First best: the efforts a journal would dictate if it could observe
types and effort, and the acceptance probability that induces them.

Run: python3 demos/03_first_best.py
"""

from peerreview import Population
from peerreview.first_best import first_best_solve, implementing_probability, induced_outcome

pop = Population(0.5, 4.0, 2.0)
for n in (0.5, 0.7):
    fb = first_best_solve(pop, n)
    p = implementing_probability(pop, n)
    a1, a0, beta = induced_outcome(pop, n)
    print(f"n={n}: efforts ({fb.effort_skilled:.6f}, {fb.effort_unskilled:.6f}) beta={fb.beta:.4f} "
          f"shadow price={fb.multiplier:.4f}")
    print(f"       accept good papers with prob {p:.4f} -> authors choose ({a1:.6f}, {a0:.6f}), beta={beta:.4f}")
