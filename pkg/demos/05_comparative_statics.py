"""Comparative statics: sweep one parameter and summarize the direction.

Run: python3 demos/05_comparative_statics.py
"""

from peerreview.sweep import Scenario, SweepSpec, run_sweep, statics_report

base = Scenario(alpha=0.5, theta_skilled=8.0, theta_unskilled=4.0, sigma=1.0, n=0.3125,
                kappa=0.3, z_bar=1.0)

for param, lo, hi, solver, column in [
        ("n", 0.05, 0.45, "one_shot_equilibrium", "z_bar"),
        ("theta_skilled", 5.0, 14.0, "one_shot_equilibrium", "z_bar"),
        ("kappa", 0.01, 0.99, "dynamic_fixed_policy", "effort_skilled"),
        ("n", 0.3, 0.95, "one_shot_equilibrium", "z_bar")]:
    rows = run_sweep(SweepSpec(param, lo, hi, 25, base, solver))
    rep = statics_report(rows, column)
    infeasible = sum(not r["feasible"] for r in rows)
    print(f"{param:>13} -> {column:<15} {rep.label:<13} breaks={[round(b, 3) for b in rep.breaks]} "
          f"infeasible rows={infeasible}")
