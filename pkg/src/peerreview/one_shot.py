"""One-shot review: acceptance rates, author best responses, aggregate
impact and yield, and the journal's threshold choice.

Functions taking ``z_bar`` broadcast over numpy arrays, which the root
scans rely on; scalar input gives scalar output.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import InfeasibleCapacityError, NumericalError, RootNotFoundError
from .gaussian import std_normal_cdf, std_normal_pdf, std_normal_quantile
from .model import Quality, as_capacity, as_sigma, average_cost, scalarize

SCAN_POINTS = 1000
ROOT_XTOL = 1e-12
IDENTITY_GUARD = 1e-9


@dataclass(frozen=True)
class BestResponse:
    effort: float
    success_rate: float
    corner: bool


@dataclass(frozen=True)
class Outcome:
    z_bar: float
    beta: float
    impact: float
    yield_: float
    rate_high: float
    rate_low: float
    effort_skilled: float
    effort_unskilled: float
    success_skilled: float
    success_unskilled: float
    interior_all: bool


def scan_window(sigma):
    """Threshold range outside which acceptance rates are saturated."""
    return -2.0 * sigma, 1.0 + 6.0 * sigma


def acceptance_rate(q, z_bar, sigma):
    """P[q + eps >= z_bar] for eps ~ N(0, sigma^2)."""
    sigma = as_sigma(sigma)
    return scalarize(std_normal_cdf((int(Quality(q)) - np.asarray(z_bar, dtype=float)) / sigma))


def rate_gap(z_bar, sigma):
    """High-minus-low acceptance rate written as ``Phi(z/s) - Phi((z-1)/s)``."""
    sigma = as_sigma(sigma)
    z = np.asarray(z_bar, dtype=float)
    return scalarize(std_normal_cdf(z / sigma) - std_normal_cdf((z - 1.0) / sigma))


def success_rate(effort):
    return scalarize(-np.expm1(-np.asarray(effort, dtype=float)))


def _check_effort(effort):
    if np.any(np.asarray(effort) < 0):
        raise ValueError(f"effort must be non-negative, got {effort!r}")


def author_utility(effort, theta, z_bar, sigma):
    _check_effort(effort)
    p1 = acceptance_rate(Quality.HIGH, z_bar, sigma)
    p0 = acceptance_rate(Quality.LOW, z_bar, sigma)
    return scalarize(p0 + success_rate(effort) * (p1 - p0) - np.asarray(effort) / theta)


def effort_from_gap(theta, gap):
    """Optimal effort when the marginal value of a high-quality paper is ``gap``.

    Returns ``(effort, success, corner)``; the corner is ``theta*gap < 1``.
    """
    m = theta * np.asarray(gap, dtype=float)
    corner = m < 1.0
    safe = np.where(corner, 1.0, m)
    effort = np.where(corner, 0.0, np.log(safe))
    success = np.where(corner, 0.0, 1.0 - 1.0 / safe)
    return scalarize(effort), scalarize(success), scalarize(corner)


def best_effort(theta, z_bar, sigma):
    p1 = acceptance_rate(Quality.HIGH, z_bar, sigma)
    p0 = acceptance_rate(Quality.LOW, z_bar, sigma)
    return BestResponse(*effort_from_gap(theta, p1 - p0))


def interior_closed_forms(pop, z_bar, sigma):
    """High-quality share and yield from the interior closed forms
    ``1 - c/(p1 - p0)`` and ``p1 - c``. Only meaningful when both
    author types are interior."""
    c = average_cost(pop)
    p1 = acceptance_rate(Quality.HIGH, z_bar, sigma)
    p0 = acceptance_rate(Quality.LOW, z_bar, sigma)
    return 1.0 - c / (p1 - p0), p1 - c


def aggregate(pop, z_bar, sigma):
    """Equilibrium outcome at threshold ``z_bar`` with best-responding authors.

    Uses the direct definitions (share-weighted success rates, then
    ``X = beta p1`` and ``Y = X + (1-beta) p0``), so corner regimes are
    handled. Where every type is interior the closed forms are evaluated
    as well and must agree.
    """
    sigma = as_sigma(sigma)
    z = np.asarray(z_bar, dtype=float)
    p1 = acceptance_rate(Quality.HIGH, z, sigma)
    p0 = acceptance_rate(Quality.LOW, z, sigma)
    a1, y1, corner1 = effort_from_gap(pop.theta_skilled, p1 - p0)
    a0, y0, corner0 = effort_from_gap(pop.theta_unskilled, p1 - p0)
    beta = pop.alpha * y1 + (1.0 - pop.alpha) * y0
    impact = beta * p1
    yield_ = impact + (1.0 - beta) * p0
    interior = ~(np.asarray(corner1) | np.asarray(corner0))

    if np.any(interior):
        beta_cf, yield_cf = interior_closed_forms(pop, z, sigma)
        err = np.where(interior, np.maximum(np.abs(beta - beta_cf),
                                            np.abs(yield_ - yield_cf)), 0.0)
        if np.max(err) > IDENTITY_GUARD:
            raise NumericalError(f"closed-form yield mismatch {np.max(err):.3g}")

    return Outcome(z_bar=scalarize(z), beta=scalarize(beta),
                   impact=scalarize(impact), yield_=scalarize(yield_),
                   rate_high=p1, rate_low=p0, effort_skilled=a1,
                   effort_unskilled=a0, success_skilled=y1,
                   success_unskilled=y0, interior_all=scalarize(interior))


def capacity_threshold(pop, sigma, n):
    """Threshold making the interior yield ``p1 - c`` equal capacity ``n``.

    Raises
    ------
    InfeasibleCapacityError
        If ``1 - c - n`` is not an interior probability.
    """
    sigma = as_sigma(sigma)
    n = as_capacity(n)
    target = 1.0 - average_cost(pop) - n
    if not 0.0 < target < 1.0:
        raise InfeasibleCapacityError(
            f"need 0 < 1 - c_bar - n < 1, got {target:.6g} "
            f"(c_bar={average_cost(pop):.6g}, n={n:.6g})")
    try:
        return sigma * std_normal_quantile(target) + 1.0
    except ValueError as exc:
        raise InfeasibleCapacityError(str(exc)) from exc


def foc_residual(pop, z_bar, sigma):
    """Left minus right side of the unconstrained impact first-order condition.

    Positive values mean impact is locally decreasing in the threshold:
    ``sigma (V-U)^2 dX/dz = -residual``.
    """
    sigma = as_sigma(sigma)
    z = np.asarray(z_bar, dtype=float)
    big_u = std_normal_cdf((z - 1.0) / sigma)
    big_v = std_normal_cdf(z / sigma)
    u = std_normal_pdf((z - 1.0) / sigma)
    v = std_normal_pdf(z / sigma)
    c = average_cost(pop)
    return scalarize((big_v - big_u) ** 2 * u
                     - c * ((1.0 - big_u) * v - (1.0 - big_v) * u))


@dataclass(frozen=True)
class UnconstrainedOptimum:
    z_bar: float
    impact: float
    residual: float
    n_roots: int
    quasiconcave: bool


def _valid_grid(pop, sigma, points=SCAN_POINTS):
    lo, hi = scan_window(sigma)
    grid = np.linspace(lo, hi, points)
    valid = pop.theta_unskilled * rate_gap(grid, sigma) >= 1.0
    return grid, valid


def unconstrained_threshold(pop, sigma):
    """Maximize impact without the capacity constraint.

    Scans the window for ``-`` to ``+`` sign changes of :func:`foc_residual`
    among thresholds where both types are interior, refines each by
    bracketed root finding and keeps the one with the largest impact.
    ``quasiconcave`` reports whether impact on the valid scan grid
    rises up to the optimum and falls after it.

    Raises
    ------
    RootNotFoundError
        If no such sign change exists.
    """
    sigma = as_sigma(sigma)
    grid, valid = _valid_grid(pop, sigma)
    resid = foc_residual(pop, grid, sigma)
    roots = []
    for i in range(len(grid) - 1):
        if not (valid[i] and valid[i + 1]):
            continue
        if resid[i] < 0.0 <= resid[i + 1]:
            if resid[i + 1] == 0.0:
                roots.append(grid[i + 1])
            else:
                roots.append(brentq(lambda z: foc_residual(pop, z, sigma),
                                    grid[i], grid[i + 1], xtol=ROOT_XTOL))
    if not roots:
        raise RootNotFoundError("no interior sign change of the impact FOC")

    impacts = [float(aggregate(pop, z, sigma).impact) for z in roots]
    best = int(np.argmax(impacts))
    z_star = float(roots[best])

    zs = grid[valid]
    dx = np.diff(aggregate(pop, zs, sigma).impact)
    rising = zs[1:] <= z_star
    falling = zs[:-1] >= z_star
    quasi = bool(np.all(dx[rising] >= -1e-12) and np.all(dx[falling] <= 1e-12))
    return UnconstrainedOptimum(z_bar=z_star, impact=impacts[best],
                                residual=float(foc_residual(pop, z_star, sigma)),
                                n_roots=len(roots), quasiconcave=quasi)


@dataclass(frozen=True)
class OneShotEquilibrium:
    """``branch`` is ``"unconstrained"`` when capacity is slack at the impact
    optimum, ``"capacity"`` when the closed-form binding threshold applies,
    and ``"capacity_corner"`` when some type is at a corner there and the
    binding threshold had to be found numerically."""

    z_bar: float
    outcome: Outcome
    branch: str


def yield_roots(yield_fn, impact_fn, target, lo, hi, points=SCAN_POINTS):
    """All roots of ``yield_fn(z) = target`` on ``[lo, hi]`` found by a scan
    plus bracketed refinement, sorted by descending impact then ascending z."""
    grid = np.linspace(lo, hi, points)
    g = yield_fn(grid) - target
    roots = list(grid[g == 0.0])
    for i in np.nonzero(g[:-1] * g[1:] < 0.0)[0]:
        roots.append(brentq(lambda z: float(yield_fn(z)) - target,
                            grid[i], grid[i + 1], xtol=ROOT_XTOL))
    return sorted(roots, key=lambda z: (-float(impact_fn(z)), z))


def one_shot_equilibrium(pop, sigma, n):
    sigma = as_sigma(sigma)
    n = as_capacity(n)
    try:
        opt = unconstrained_threshold(pop, sigma)
    except RootNotFoundError:
        opt = None
    if opt is not None:
        at_opt = aggregate(pop, opt.z_bar, sigma)
        if n >= at_opt.yield_:
            return OneShotEquilibrium(opt.z_bar, at_opt, "unconstrained")

    z = capacity_threshold(pop, sigma, n)
    out = aggregate(pop, z, sigma)
    if out.interior_all:
        return OneShotEquilibrium(float(z), out, "capacity")

    lo, hi = scan_window(sigma)
    roots = yield_roots(lambda x: aggregate(pop, x, sigma).yield_,
                        lambda x: aggregate(pop, x, sigma).impact, n, lo, hi)
    if not roots:
        raise InfeasibleCapacityError(f"no threshold gives yield {n:.6g}")
    z = float(roots[0])
    return OneShotEquilibrium(z, aggregate(pop, z, sigma), "capacity_corner")
