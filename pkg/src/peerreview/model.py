"""Primitives shared by every solver: author population, review technology,
journal capacity, and the two policy types."""

import enum
import math
from dataclasses import dataclass

import numpy as np


class Quality(enum.IntEnum):
    LOW = 0
    HIGH = 1


def _check_finite(**kwargs):
    for name, value in kwargs.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Population:
    """Two author types: a share ``alpha`` with productivity ``theta_skilled``,
    the rest with ``theta_unskilled``."""

    alpha: float
    theta_skilled: float
    theta_unskilled: float

    def __post_init__(self):
        _check_finite(alpha=self.alpha, theta_skilled=self.theta_skilled,
                      theta_unskilled=self.theta_unskilled)
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.theta_skilled > self.theta_unskilled > 0.0:
            raise ValueError(
                "need theta_skilled > theta_unskilled > 0, got "
                f"{self.theta_skilled}, {self.theta_unskilled}")

    @property
    def c_bar(self):
        return average_cost(self)


@dataclass(frozen=True)
class Technology:
    sigma: float

    def __post_init__(self):
        _check_finite(sigma=self.sigma)
        if self.sigma <= 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class Capacity:
    n: float

    def __post_init__(self):
        _check_finite(n=self.n)
        if not 0.0 < self.n < 1.0:
            raise ValueError(f"capacity n must lie in (0, 1), got {self.n}")


@dataclass(frozen=True)
class OneShotPolicy:
    z_bar: float

    def __post_init__(self):
        _check_finite(z_bar=self.z_bar)


@dataclass(frozen=True)
class DynamicPolicy:
    """Evaluation threshold plus the cost ``kappa`` of challenging a rejection.

    ``kappa`` is only bounded below; values at or above 1 are legal and
    simply make every policy hawkish.
    """

    z_bar: float
    kappa: float

    def __post_init__(self):
        _check_finite(z_bar=self.z_bar, kappa=self.kappa)
        if self.kappa < 0.0:
            raise ValueError(f"kappa must be non-negative, got {self.kappa}")


def average_cost(pop):
    """Population-weighted marginal effort cost ``alpha/theta1 + (1-alpha)/theta0``."""
    return pop.alpha / pop.theta_skilled + (1.0 - pop.alpha) / pop.theta_unskilled


def interior_margin(theta, rate_gap):
    """``theta * rate_gap - 1``; negative means the type sits at the zero-effort corner."""
    return scalarize(theta * np.asarray(rate_gap, dtype=float) - 1.0)


def as_sigma(sigma):
    """Accept a :class:`Technology` or a bare positive float."""
    if isinstance(sigma, Technology):
        return sigma.sigma
    return Technology(float(sigma)).sigma


def as_capacity(n):
    if isinstance(n, Capacity):
        return n.n
    return Capacity(float(n)).n


def scalarize(x):
    """0-d arrays and numpy scalars become Python scalars; arrays pass through."""
    arr = np.asarray(x)
    return arr.item() if arr.ndim == 0 else arr
