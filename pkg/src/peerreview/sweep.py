"""Single-parameter comparative statics.

A sweep varies one scenario parameter over a linear grid, solves the
chosen equilibrium at every point and returns rows with a fixed column
set. Infeasible points stay in the table with ``feasible=False`` and NaN
outputs.
"""

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .dynamic import aggregate_dynamic, optimize_policy
from .errors import InfeasibleCapacityError, RootNotFoundError
from .first_best import first_best_solve
from .model import DynamicPolicy, Population, average_cost
from .one_shot import capacity_threshold, one_shot_equilibrium

PARAMETERS = ("alpha", "theta_skilled", "theta_unskilled", "sigma", "n", "kappa", "z_bar")
SOLVERS = ("first_best", "one_shot_equilibrium", "dynamic_equilibrium", "dynamic_fixed_policy")
MONOTONE_TOL = 1e-12


@dataclass(frozen=True)
class Scenario:
    alpha: float
    theta_skilled: float
    theta_unskilled: float
    sigma: float
    n: float
    kappa: float = None
    z_bar: float = None

    @property
    def population(self):
        return Population(self.alpha, self.theta_skilled, self.theta_unskilled)

    @property
    def policy(self):
        if self.kappa is None or self.z_bar is None:
            raise ValueError("scenario needs both kappa and z_bar for a fixed dynamic policy")
        return DynamicPolicy(self.z_bar, self.kappa)


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    lo: float
    hi: float
    steps: int
    base: Scenario
    solver: str = "one_shot_equilibrium"

    def __post_init__(self):
        if self.parameter not in PARAMETERS:
            raise ValueError(f"unknown sweep parameter {self.parameter!r}")
        if self.solver not in SOLVERS:
            raise ValueError(f"unknown solver {self.solver!r}")
        if not self.lo < self.hi:
            raise ValueError("sweep needs lo < hi")
        if int(self.steps) < 2:
            raise ValueError("sweep needs at least 2 steps")


COLUMNS = {
    "first_best": ("c_bar", "effort_skilled", "effort_unskilled", "success_skilled",
                   "success_unskilled", "beta", "multiplier", "constrained", "corner"),
    "one_shot_equilibrium": ("c_bar", "z_bar", "branch", "beta", "impact", "yield",
                             "rate_high", "rate_low", "effort_skilled",
                             "effort_unskilled", "interior"),
    "dynamic_equilibrium": ("c_bar", "z_bar", "kappa", "regime", "beta_hat", "impact_hat",
                            "yield_hat", "delta", "effort_skilled", "effort_unskilled",
                            "interior"),
    "dynamic_fixed_policy": ("c_bar", "z_bar", "kappa", "regime", "beta_hat", "impact_hat",
                             "yield_hat", "tau", "delta", "effort_skilled",
                             "effort_unskilled", "success_skilled", "success_unskilled",
                             "challenge_high", "challenge_low", "interior"),
}


def _dynamic_columns(o):
    return dict(z_bar=o.z_bar, kappa=o.kappa, regime=o.regime.value, beta_hat=o.beta_hat,
                impact_hat=o.impact_hat, yield_hat=o.yield_hat, tau=o.tau, delta=o.delta,
                effort_skilled=o.effort_skilled, effort_unskilled=o.effort_unskilled,
                success_skilled=o.success_skilled, success_unskilled=o.success_unskilled,
                challenge_high=o.challenge_high, challenge_low=o.challenge_low,
                interior=o.interior_all)


def solve_row(scenario, solver):
    """Outputs of ``solver`` at one scenario as a dict of :data:`COLUMNS`."""
    pop = scenario.population
    out = {"c_bar": average_cost(pop)}
    if solver == "first_best":
        fb = first_best_solve(pop, scenario.n)
        out.update(effort_skilled=fb.effort_skilled, effort_unskilled=fb.effort_unskilled,
                   success_skilled=fb.success_skilled, success_unskilled=fb.success_unskilled,
                   beta=fb.beta, multiplier=fb.multiplier, constrained=fb.constrained,
                   corner=fb.corner)
    elif solver == "one_shot_equilibrium":
        # c_bar + n >= 1 is the feasibility frontier even where the slack optimum exists
        capacity_threshold(pop, scenario.sigma, scenario.n)
        eq = one_shot_equilibrium(pop, scenario.sigma, scenario.n)
        o = eq.outcome
        out.update(z_bar=eq.z_bar, branch=eq.branch, beta=o.beta, impact=o.impact,
                   yield_=o.yield_, rate_high=o.rate_high, rate_low=o.rate_low,
                   effort_skilled=o.effort_skilled, effort_unskilled=o.effort_unskilled,
                   interior=o.interior_all)
        out["yield"] = out.pop("yield_")
    elif solver == "dynamic_equilibrium":
        _, o = optimize_policy(pop, scenario.sigma, scenario.n)
        out.update(_dynamic_columns(o))
    else:
        o = aggregate_dynamic(pop, scenario.policy, scenario.sigma)
        out.update(_dynamic_columns(o))
    return {k: out[k] for k in COLUMNS[solver]}


def run_sweep(spec):
    """Solve ``spec.solver`` at ``spec.steps`` evenly spaced parameter values.

    Rows are dicts ordered by parameter value with ``param``, ``value`` and
    ``feasible`` first. Raises ``ValueError`` if no point is feasible.
    """
    rows = []
    for value in np.linspace(spec.lo, spec.hi, int(spec.steps)):
        row = {"param": spec.parameter, "value": float(value), "feasible": True}
        try:
            scenario = replace(spec.base, **{spec.parameter: float(value)})
            row.update(solve_row(scenario, spec.solver))
        except (InfeasibleCapacityError, RootNotFoundError, ValueError):
            row["feasible"] = False
            row.update({c: math.nan for c in COLUMNS[spec.solver]})
        rows.append(row)
    if not any(r["feasible"] for r in rows):
        raise ValueError(f"every point of the {spec.parameter} sweep is infeasible")
    return rows


@dataclass(frozen=True)
class StaticsReport:
    """``label`` is one of increasing, decreasing, constant, non-monotone.
    ``strict`` means every first difference exceeded the tolerance in the
    labelled direction. ``breaks`` are parameter values where the sign of
    non-negligible first differences flips."""

    column: str
    label: str
    strict: bool
    breaks: list = field(default_factory=list)
    n_valid: int = 0


def statics_report(rows, column, tol=MONOTONE_TOL):
    valid = [r for r in rows if r["feasible"]]
    if valid and column not in valid[0]:
        raise KeyError(f"no column {column!r} in sweep rows")
    valid = [r for r in valid if isinstance(r[column], (int, float)) and np.isfinite(r[column])]
    if len(valid) < 3:
        raise ValueError(f"statics need at least 3 valid rows, got {len(valid)}")
    x = np.array([r["value"] for r in valid])
    y = np.array([float(r[column]) for r in valid], dtype=float)
    d = np.diff(y)
    sign = np.where(d > tol, 1, np.where(d < -tol, -1, 0))
    nz = np.nonzero(sign)[0]
    breaks = [float(x[nz[j + 1]]) for j in range(len(nz) - 1) if sign[nz[j]] != sign[nz[j + 1]]]
    if len(nz) == 0:
        label, strict = "constant", False
    elif breaks:
        label, strict = "non-monotone", False
    else:
        label = "increasing" if sign[nz[0]] > 0 else "decreasing"
        strict = len(nz) == len(sign)
    return StaticsReport(column, label, strict, breaks, len(valid))
