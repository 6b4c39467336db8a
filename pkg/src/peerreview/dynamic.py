"""Dynamic review: rejected authors may pay ``kappa`` for an independent
second evaluation.

Challenge decisions depend only on paper quality, so the threshold axis
splits into at most three regime segments (dovish, moderate, hawkish)
on which the challenge profile is fixed and every aggregate is smooth.
Capacity root finding works segment by segment because yield jumps at
the segment boundaries.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np
from . import one_shot
from ._search import golden_section_max
from .errors import InfeasibleCapacityError, NumericalError
from .gaussian import QUANTILE_MAX, QUANTILE_MIN, std_normal_quantile
from .model import (DynamicPolicy, Quality, as_capacity, as_sigma,
                    average_cost, scalarize)
from .one_shot import acceptance_rate, effort_from_gap, success_rate

KAPPA_GRID = 512


class Regime(str, enum.Enum):
    HAWKISH = "hawkish"
    MODERATE = "moderate"
    DOVISH = "dovish"


@dataclass(frozen=True)
class DynamicBestResponse:
    effort: float
    success_rate: float
    challenge_high: bool
    challenge_low: bool
    corner: bool


@dataclass(frozen=True)
class DynamicOutcome:
    z_bar: float
    kappa: float
    beta_hat: float
    impact_hat: float
    yield_hat: float
    total_rate_high: float
    total_rate_low: float
    virtual_rate_high: float
    virtual_rate_low: float
    tau: float
    delta: float
    regime: Regime
    challenge_high: bool
    challenge_low: bool
    effort_skilled: float
    effort_unskilled: float
    success_skilled: float
    success_unskilled: float
    interior_all: bool


def challenge_choice(q, z_bar, kappa, sigma):
    """Challenge iff the redraw's acceptance rate covers its cost; ties challenge."""
    return scalarize(np.asarray(acceptance_rate(q, z_bar, sigma)) >= kappa)


def classify_policy(z_bar, kappa, sigma):
    p1 = acceptance_rate(Quality.HIGH, z_bar, sigma)
    p0 = acceptance_rate(Quality.LOW, z_bar, sigma)
    if p1 < kappa:
        return Regime.HAWKISH
    if p0 < kappa:
        return Regime.MODERATE
    return Regime.DOVISH


def regime_bounds(kappa, sigma):
    """Thresholds ``(z_lo, z_hi)`` where low- and high-quality holders stop
    challenging: dovish for ``z <= z_lo``, moderate up to ``z_hi``,
    hawkish beyond. Infinite when ``1 - kappa`` leaves the quantile band."""
    sigma = as_sigma(sigma)
    tail = 1.0 - kappa
    if tail > QUANTILE_MAX:
        z_lo = math.inf
    elif tail < QUANTILE_MIN:
        z_lo = -math.inf
    else:
        z_lo = sigma * std_normal_quantile(tail)
    return z_lo, z_lo + 1.0


def rates(q, z_bar, kappa, sigma, s):
    """Total and virtual (net of expected challenge cost) acceptance rates."""
    p = np.asarray(acceptance_rate(q, z_bar, sigma))
    s = np.asarray(s, dtype=float)
    total = p + s * (1.0 - p) * p
    virtual = total - s * (1.0 - p) * kappa
    return scalarize(total), scalarize(virtual)


def _virtual_gap(z_bar, kappa, sigma, s_high, s_low):
    _, v1 = rates(Quality.HIGH, z_bar, kappa, sigma, s_high)
    _, v0 = rates(Quality.LOW, z_bar, kappa, sigma, s_low)
    return np.asarray(v1) - np.asarray(v0)


def author_utility_dynamic(effort, s_high, s_low, theta, policy, sigma):
    if np.any(np.asarray(effort) < 0):
        raise ValueError(f"effort must be non-negative, got {effort!r}")
    _, v1 = rates(Quality.HIGH, policy.z_bar, policy.kappa, sigma, s_high)
    _, v0 = rates(Quality.LOW, policy.z_bar, policy.kappa, sigma, s_low)
    y = success_rate(effort)
    return scalarize(y * v1 + (1.0 - y) * v0 - np.asarray(effort) / theta)


def author_best_response(theta, policy, sigma):
    s1 = challenge_choice(Quality.HIGH, policy.z_bar, policy.kappa, sigma)
    s0 = challenge_choice(Quality.LOW, policy.z_bar, policy.kappa, sigma)
    gap = _virtual_gap(policy.z_bar, policy.kappa, sigma, s1, s0)
    effort, success, corner = effort_from_gap(theta, gap)
    return DynamicBestResponse(effort, success, s1, s0, corner)


def _evaluate(pop, z_bar, kappa, sigma, s1, s0):
    """Aggregates for a fixed challenge profile; broadcasts over ``z_bar``."""
    z = np.asarray(z_bar, dtype=float)
    p1 = np.asarray(acceptance_rate(Quality.HIGH, z, sigma))
    p0 = np.asarray(acceptance_rate(Quality.LOW, z, sigma))
    s1 = np.asarray(s1, dtype=float)
    s0 = np.asarray(s0, dtype=float)
    hat1 = p1 + s1 * (1.0 - p1) * p1
    hat0 = p0 + s0 * (1.0 - p0) * p0
    til1 = hat1 - s1 * (1.0 - p1) * kappa
    til0 = hat0 - s0 * (1.0 - p0) * kappa
    a1, y1, c1 = effort_from_gap(pop.theta_skilled, til1 - til0)
    a0, y0, c0 = effort_from_gap(pop.theta_unskilled, til1 - til0)
    beta = pop.alpha * np.asarray(y1) + (1.0 - pop.alpha) * np.asarray(y0)
    impact = beta * hat1
    yield_ = impact + (1.0 - beta) * hat0
    return dict(p1=p1, p0=p0, hat1=hat1, hat0=hat0, til1=til1, til0=til0,
                a1=a1, a0=a0, y1=y1, y0=y0, beta=beta, impact=impact,
                yield_=yield_, interior=~(np.asarray(c1) | np.asarray(c0)))


def dynamic_closed_forms(pop, policy, sigma):
    """High-quality share ``1 - c/(v1 - v0)`` and yield
    ``(p1 - c) + s1 (1-p1) p1 - c tau/(v1 - v0)``, valid when every type is
    interior. Returns ``(beta_hat, yield_hat, tau)``."""
    z, kappa = policy.z_bar, policy.kappa
    c = average_cost(pop)
    p1 = acceptance_rate(Quality.HIGH, z, sigma)
    p0 = acceptance_rate(Quality.LOW, z, sigma)
    s1 = float(challenge_choice(Quality.HIGH, z, kappa, sigma))
    s0 = float(challenge_choice(Quality.LOW, z, kappa, sigma))
    gap = _virtual_gap(z, kappa, sigma, s1, s0)
    tau = (s1 * (1.0 - p1) - s0 * (1.0 - p0)) * kappa
    beta = 1.0 - c / gap
    yield_ = (p1 - c) + s1 * (1.0 - p1) * p1 - c * tau / gap
    return scalarize(beta), scalarize(yield_), tau


def aggregate_dynamic(pop, policy, sigma):
    """Equilibrium outcome under a fixed ``(z_bar, kappa)`` policy.

    ``delta`` compares against the one-shot yield at the same threshold.
    """
    sigma = as_sigma(sigma)
    z, kappa = policy.z_bar, policy.kappa
    s1 = bool(challenge_choice(Quality.HIGH, z, kappa, sigma))
    s0 = bool(challenge_choice(Quality.LOW, z, kappa, sigma))
    ev = _evaluate(pop, z, kappa, sigma, s1, s0)
    base = one_shot.aggregate(pop, z, sigma)
    tau = (s1 * (1.0 - ev["p1"]) - s0 * (1.0 - ev["p0"])) * kappa
    interior = bool(ev["interior"])
    if interior:
        beta_cf, yield_cf, _ = dynamic_closed_forms(pop, policy, sigma)
        err = max(abs(ev["beta"] - beta_cf), abs(ev["yield_"] - yield_cf))
        if err > one_shot.IDENTITY_GUARD:
            raise NumericalError(f"closed-form dynamic yield mismatch {err:.3g}")
    f = lambda key: scalarize(ev[key])  # noqa: E731
    return DynamicOutcome(
        z_bar=float(z), kappa=float(kappa), beta_hat=f("beta"),
        impact_hat=f("impact"), yield_hat=f("yield_"),
        total_rate_high=f("hat1"), total_rate_low=f("hat0"),
        virtual_rate_high=f("til1"), virtual_rate_low=f("til0"),
        tau=scalarize(tau), delta=f("yield_") - base.yield_,
        regime=classify_policy(z, kappa, sigma),
        challenge_high=s1, challenge_low=s0,
        effort_skilled=f("a1"), effort_unskilled=f("a0"),
        success_skilled=f("y1"), success_unskilled=f("y0"),
        interior_all=interior)


def regime_segments(kappa, sigma):
    """``(lo, hi, s_high, s_low)`` pieces of the scan window with a fixed
    challenge profile, in increasing threshold order."""
    lo, hi = one_shot.scan_window(sigma)
    z_lo, z_hi = regime_bounds(kappa, sigma)
    pieces = [(lo, min(z_lo, hi), True, True),
              (max(z_lo, lo), min(z_hi, hi), True, False),
              (max(z_hi, lo), hi, False, False)]
    return [p for p in pieces if p[0] < p[1]]


def _candidate_thresholds(pop, sigma, n, kappa):
    found = []
    for lo, hi, s1, s0 in regime_segments(kappa, sigma):
        roots = one_shot.yield_roots(
            lambda z: _evaluate(pop, z, kappa, sigma, s1, s0)["yield_"],
            lambda z: _evaluate(pop, z, kappa, sigma, s1, s0)["impact"],
            n, lo, hi)
        for z in roots:
            out = aggregate_dynamic(pop, DynamicPolicy(float(z), kappa), sigma)
            # a root sitting on a segment edge may classify into the neighbour
            if abs(out.yield_hat - n) <= 1e-9:
                found.append(out)
    return found


def threshold_for_capacity(pop, sigma, n, kappa):
    """Threshold at which dynamic yield equals capacity for a given ``kappa``.

    Among roots across all regime segments the one with the largest
    dynamic impact wins; exact ties go to the smaller threshold.

    Raises
    ------
    InfeasibleCapacityError
        If no segment contains a root.
    """
    sigma = as_sigma(sigma)
    n = as_capacity(n)
    found = _candidate_thresholds(pop, sigma, n, kappa)
    if not found:
        raise InfeasibleCapacityError(
            f"no threshold gives dynamic yield {n:.6g} at kappa={kappa:.6g}")
    best = min(found, key=lambda o: (-o.impact_hat, o.z_bar))
    return best.z_bar


def _best_at_kappa(pop, sigma, n, kappa):
    try:
        z = threshold_for_capacity(pop, sigma, n, kappa)
    except InfeasibleCapacityError:
        return None
    return aggregate_dynamic(pop, DynamicPolicy(z, kappa), sigma)


def optimize_policy(pop, sigma, n, grid_points=KAPPA_GRID):
    """Journal's dynamic policy: maximize dynamic impact over ``kappa`` in
    [0, 1], with the threshold pinned by the binding capacity constraint.

    A uniform grid locates the best cell, then golden-section search
    refines inside the two neighbouring cells. Kappas with no binding
    threshold count as infeasible. Ties go to the smaller ``kappa``.

    Returns
    -------
    (DynamicPolicy, DynamicOutcome)
    """
    sigma = as_sigma(sigma)
    n = as_capacity(n)
    kappas = np.linspace(0.0, 1.0, grid_points)
    outs = [_best_at_kappa(pop, sigma, n, float(k)) for k in kappas]
    values = np.array([-np.inf if o is None else o.impact_hat for o in outs])
    if not np.isfinite(values).any():
        raise InfeasibleCapacityError(
            f"capacity {n:.6g} is infeasible for every kappa in [0, 1]")
    i = int(np.argmax(values))
    best = outs[i]

    def impact_at(k):
        o = _best_at_kappa(pop, sigma, n, k)
        return -np.inf if o is None else o.impact_hat

    lo, hi = kappas[max(i - 1, 0)], kappas[min(i + 1, grid_points - 1)]
    k_ref, x_ref = golden_section_max(impact_at, float(lo), float(hi))
    if x_ref > best.impact_hat:
        best = _best_at_kappa(pop, sigma, n, k_ref)
    return DynamicPolicy(best.z_bar, best.kappa), best
