"""Solvers and simulators for a peer-review game with hidden effort, hidden
author type, noisy evaluation and an optional paid challenge of rejections."""

from .dynamic import (DynamicBestResponse, DynamicOutcome, Regime, aggregate_dynamic,
                      author_best_response, author_utility_dynamic, challenge_choice,
                      classify_policy, optimize_policy, rates, regime_bounds,
                      threshold_for_capacity)
from .errors import InfeasibleCapacityError, NumericalError, RootNotFoundError
from .first_best import (FirstBest, first_best_solve, implementing_probability,
                         induced_effort, induced_outcome, welfare)
from .gaussian import std_normal_cdf, std_normal_pdf, std_normal_quantile
from .model import (Capacity, DynamicPolicy, OneShotPolicy, Population, Quality,
                    Technology, average_cost, interior_margin)
from .monte_carlo import SimConfig, SimEstimates, grid_best_response, simulate
from .one_shot import (BestResponse, Outcome, acceptance_rate, aggregate, author_utility,
                       best_effort, capacity_threshold, foc_residual, one_shot_equilibrium,
                       rate_gap, unconstrained_threshold)
from .sweep import Scenario, SweepSpec, run_sweep, statics_report

__version__ = "0.1.0"
