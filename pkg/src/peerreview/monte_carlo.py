"""Agent-level simulation of the review game, used as a stochastic oracle
for the analytic aggregates, plus brute-force best responses.

Randomness is counter based: every author index ``k`` owns four fixed
draws (type, quality, first signal, challenge signal) obtained by hashing
``(seed, k, slot)``. A draw is consumed whether or not it is used, so the
results do not depend on how the population is partitioned or on which
authors end up challenging.
"""

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .dynamic import author_best_response, author_utility_dynamic, rates
from .model import DynamicPolicy, OneShotPolicy, Quality, as_sigma
from .one_shot import author_utility, best_effort

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_SLOTS = 4
_CHUNK = 1 << 18
TIE_TOL = 1e-12


class Mode(str, enum.Enum):
    ONE_SHOT = "one_shot"
    DYNAMIC = "dynamic"


class EffortSource(str, enum.Enum):
    ANALYTIC = "analytic"
    GRID_ORACLE = "grid_oracle"


@dataclass(frozen=True)
class SimConfig:
    population_size: int
    seed: int
    mode: Mode = None
    effort_source: EffortSource = EffortSource.ANALYTIC
    partitions: int = 1
    grid_step: float = 1e-3

    def __post_init__(self):
        if int(self.population_size) < 1:
            raise ValueError("population_size must be at least 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if int(self.partitions) < 1:
            raise ValueError("partitions must be at least 1")
        if self.mode is not None:
            object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "effort_source", EffortSource(self.effort_source))


@dataclass(frozen=True)
class SimEstimates:
    beta_emp: float
    yield_emp: float
    impact_emp: float
    se_beta: float
    se_yield: float
    se_impact: float
    challenges_attempted: int
    challenges_won: int
    challenges_attempted_high: int
    challenges_won_high: int
    population_size: int
    seed: int


def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def author_uniforms(seed, start, stop):
    """``(stop - start, 4)`` array of uniforms on (0, 1) for authors
    ``start..stop-1``; each row is a pure function of ``(seed, k)``."""
    with np.errstate(over="ignore"):
        root = _mix64(np.uint64(seed) ^ _GOLDEN)
        k = np.arange(start, stop, dtype=np.uint64)
        key = _mix64(root + (k + np.uint64(1)) * _GOLDEN)
        slots = np.arange(1, _SLOTS + 1, dtype=np.uint64) * _M2
        bits = _mix64(key[:, None] + slots[None, :])
    return ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


@dataclass(frozen=True)
class GridResponse:
    effort: float
    challenge_high: bool
    challenge_low: bool
    utility: float


def grid_best_response(theta, policy, sigma, effort_grid_step=1e-3):
    """Exhaustive maximization of the author's ex-ante payoff over an effort
    grid on [0, 5] and, for dynamic policies, all four challenge profiles.

    Profiles within ``1e-12`` of the best are ex-ante indifferent (always
    the case for the high-quality choice at zero effort); those ties are
    broken by whether challenging weakly raises the paper holder's own
    virtual acceptance rate.
    """
    if effort_grid_step > 1e-2:
        raise ValueError("effort_grid_step must be at most 1e-2")
    sigma = as_sigma(sigma)
    grid = np.linspace(0.0, 5.0, int(round(5.0 / effort_grid_step)) + 1)
    if isinstance(policy, OneShotPolicy):
        u = author_utility(grid, theta, policy.z_bar, sigma)
        i = int(np.argmax(u))
        return GridResponse(float(grid[i]), False, False, float(u[i]))

    results = {}
    for s1 in (True, False):
        for s0 in (True, False):
            u = author_utility_dynamic(grid, s1, s0, theta, policy, sigma)
            i = int(np.argmax(u))
            results[s1, s0] = (float(u[i]), float(grid[i]))
    top = max(v[0] for v in results.values())
    tied = [s for s, v in results.items() if v[0] >= top - TIE_TOL]

    def interim_gain(q, s):
        return (rates(q, policy.z_bar, policy.kappa, sigma, True)[1]
                - rates(q, policy.z_bar, policy.kappa, sigma, False)[1]) * (1 if s else -1)

    s1, s0 = max(tied, key=lambda s: (interim_gain(Quality.HIGH, s[0]) >= -TIE_TOL,
                                      interim_gain(Quality.LOW, s[1]) >= -TIE_TOL))
    u, a = results[s1, s0]
    return GridResponse(a, s1, s0, u)


def _author_plan(pop, policy, sigma, config):
    """Per type (index 1 skilled, 0 unskilled): success rate and challenge
    flags for low/high quality papers."""
    dynamic = isinstance(policy, DynamicPolicy)
    success = np.zeros(2)
    challenge = np.zeros((2, 2), dtype=bool)
    for t, theta in ((1, pop.theta_skilled), (0, pop.theta_unskilled)):
        if config.effort_source is EffortSource.GRID_ORACLE:
            r = grid_best_response(theta, policy, sigma, config.grid_step)
            success[t] = -np.expm1(-r.effort)
            challenge[t] = (r.challenge_low, r.challenge_high)
        elif dynamic:
            r = author_best_response(theta, policy, sigma)
            success[t] = r.success_rate
            challenge[t] = (r.challenge_low, r.challenge_high)
        else:
            success[t] = best_effort(theta, policy.z_bar, sigma).success_rate
    if not dynamic:
        challenge[:] = False
    return success, challenge


def _simulate_block(pop, z_bar, sigma, success, challenge, seed, start, stop):
    totals = np.zeros(7, dtype=np.int64)
    for lo in range(start, stop, _CHUNK):
        u = author_uniforms(seed, lo, min(lo + _CHUNK, stop))
        skilled = (u[:, 0] < pop.alpha).astype(np.intp)
        high = u[:, 1] < success[skilled]
        q = high.astype(float)
        first = q + sigma * ndtri(u[:, 2]) >= z_bar
        tries = ~first & challenge[skilled, high.astype(np.intp)]
        won = tries & (q + sigma * ndtri(u[:, 3]) >= z_bar)
        published = first | won
        totals += (high.sum(), published.sum(), (published & high).sum(),
                   tries.sum(), won.sum(), (tries & high).sum(), (won & high).sum())
    return totals


def simulate(pop, policy, sigma, config, max_workers=1):
    """Simulate ``config.population_size`` authors under ``policy``.

    The population is cut into ``config.partitions`` contiguous index
    blocks, optionally run on ``max_workers`` threads; counts are summed,
    so the result is identical for any partitioning.
    """
    sigma = as_sigma(sigma)
    mode = config.mode or (Mode.DYNAMIC if isinstance(policy, DynamicPolicy) else Mode.ONE_SHOT)
    if mode is Mode.DYNAMIC and not isinstance(policy, DynamicPolicy):
        raise ValueError("dynamic mode needs a DynamicPolicy")
    if mode is Mode.ONE_SHOT and isinstance(policy, DynamicPolicy):
        policy = OneShotPolicy(policy.z_bar)

    success, challenge = _author_plan(pop, policy, sigma, config)
    size = int(config.population_size)
    edges = np.linspace(0, size, int(config.partitions) + 1).astype(int)
    blocks = [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]
    run = lambda ab: _simulate_block(pop, policy.z_bar, sigma, success, challenge,  # noqa: E731
                                     int(config.seed), *ab)
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            parts = list(pool.map(run, blocks))
    else:
        parts = [run(b) for b in blocks]
    n_high, n_pub, n_pub_high, tries, won, tries_high, won_high = np.sum(parts, axis=0)

    def est(count):
        p = count / size
        return float(p), float(np.sqrt(p * (1.0 - p) / size))

    beta, se_beta = est(n_high)
    yld, se_yield = est(n_pub)
    imp, se_impact = est(n_pub_high)
    return SimEstimates(beta_emp=beta, yield_emp=yld, impact_emp=imp,
                        se_beta=se_beta, se_yield=se_yield, se_impact=se_impact,
                        challenges_attempted=int(tries), challenges_won=int(won),
                        challenges_attempted_high=int(tries_high),
                        challenges_won_high=int(won_high),
                        population_size=size, seed=int(config.seed))
