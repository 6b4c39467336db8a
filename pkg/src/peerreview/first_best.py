"""First-best benchmark: efforts a welfare-maximizing journal would dictate
if it could verify type and effort, and the quality-only acceptance rule
that reproduces them."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .model import as_capacity, average_cost


@dataclass(frozen=True)
class FirstBest:
    """``corner`` flags a negative computed effort, i.e. parameters outside
    the interior solution; the efforts are reported unclamped."""

    effort_skilled: float
    effort_unskilled: float
    success_skilled: float
    success_unskilled: float
    beta: float
    multiplier: float
    constrained: bool
    corner: bool


def welfare(pop, effort_skilled, effort_unskilled):
    """High-quality share minus population effort cost; broadcasts."""
    a1 = np.asarray(effort_skilled, dtype=float)
    a0 = np.asarray(effort_unskilled, dtype=float)
    beta = pop.alpha * -np.expm1(-a1) + (1.0 - pop.alpha) * -np.expm1(-a0)
    cost = pop.alpha * a1 / pop.theta_skilled + (1.0 - pop.alpha) * a0 / pop.theta_unskilled
    return beta - cost, beta


def first_best_solve(pop, n):
    n = as_capacity(n)
    c = average_cost(pop)
    constrained = n < 1.0 - c
    if constrained:
        shift = math.log(c / (1.0 - n))
        scale = (1.0 - n) / c
        beta = n
        lam = (1.0 - c - n) / (1.0 - n)
    else:
        shift, scale, beta, lam = 0.0, 1.0, 1.0 - c, 0.0
    a1 = math.log(pop.theta_skilled) + shift
    a0 = math.log(pop.theta_unskilled) + shift
    return FirstBest(
        effort_skilled=a1, effort_unskilled=a0,
        success_skilled=1.0 - scale / pop.theta_skilled,
        success_unskilled=1.0 - scale / pop.theta_unskilled,
        beta=beta, multiplier=lam, constrained=constrained,
        corner=min(a1, a0) < 0.0)


def implementing_probability(pop, n):
    """Probability of accepting verified high-quality papers that makes
    self-interested authors choose first-best effort."""
    n = as_capacity(n)
    c = average_cost(pop)
    return 1.0 if n >= 1.0 - c else c / (1.0 - n)


def induced_effort(theta, accept_prob):
    """Author's optimum of ``accept_prob * y(a) - a/theta``.

    Solved numerically from the marginal condition
    ``accept_prob * exp(-a) = 1/theta`` rather than its log closed form, so
    it serves as an independent check of :func:`first_best_solve`.
    """
    marginal = lambda a: accept_prob * math.exp(-a) - 1.0 / theta  # noqa: E731
    if marginal(0.0) <= 0.0:
        return 0.0
    hi = 1.0
    while marginal(hi) > 0.0:
        hi *= 2.0
    return brentq(marginal, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)


def induced_outcome(pop, n):
    """Efforts and high-quality share under the implementing acceptance rule.

    Returns ``(effort_skilled, effort_unskilled, beta)``.
    """
    p = implementing_probability(pop, n)
    a1 = induced_effort(pop.theta_skilled, p)
    a0 = induced_effort(pop.theta_unskilled, p)
    beta = pop.alpha * -math.expm1(-a1) + (1.0 - pop.alpha) * -math.expm1(-a0)
    return a1, a0, beta
