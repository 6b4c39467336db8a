"""Standard-normal special functions.

All three functions accept a Python float or a numpy array and broadcast
elementwise. Non-finite input raises ``ValueError``.
"""

import math

import numpy as np
from scipy.special import erfc

SQRT2 = math.sqrt(2.0)
INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# quantile accepts only this band; outside it the Newton polish loses accuracy
QUANTILE_MIN = 1e-12
QUANTILE_MAX = 1.0 - 1e-12

# rational initial guess for the quantile (Acklam), rel. error ~1.2e-9
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425
_NEWTON_STEPS = 3


def _finite(x, name="x"):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return arr


def _scalar(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def std_normal_cdf(x):
    """Phi(x), computed as erfc(-x/sqrt 2)/2 so both tails keep relative accuracy."""
    arr = _finite(x)
    return _scalar(0.5 * erfc(-arr / SQRT2))


def std_normal_pdf(x):
    arr = _finite(x)
    return _scalar(INV_SQRT_2PI * np.exp(-0.5 * arr * arr))


def _poly(coef, t):
    out = np.zeros_like(t)
    for c in coef:
        out = out * t + c
    return out


def _initial_guess(q):
    # q <= 0.5 only
    x = np.empty_like(q)
    tail = q < _P_LOW
    if np.any(tail):
        t = np.sqrt(-2.0 * np.log(q[tail]))
        x[tail] = _poly(_C, t) / (_poly(_D, t) * t + 1.0)
    mid = ~tail
    if np.any(mid):
        r = q[mid] - 0.5
        r2 = r * r
        x[mid] = _poly(_A, r2) * r / (_poly(_B, r2) * r2 + 1.0)
    return x


def std_normal_quantile(p):
    """Inverse of :func:`std_normal_cdf`.

    Works on the lower half only: for ``p > 0.5`` it inverts ``1 - p``
    (exact in floating point) and flips the sign, so upper-tail inputs
    are not degraded by cancellation in ``Phi(x) - p``.

    Raises
    ------
    ValueError
        If ``p`` lies outside ``[1e-12, 1 - 1e-12]``.
    """
    arr = np.atleast_1d(_finite(p, "p")).astype(float)
    if np.any((arr < QUANTILE_MIN) | (arr > QUANTILE_MAX)):
        raise ValueError(
            f"p must lie in [{QUANTILE_MIN:g}, 1 - {QUANTILE_MIN:g}], got {p!r}")
    upper = arr > 0.5
    q = np.where(upper, 1.0 - arr, arr)
    x = _initial_guess(q)
    for _ in range(_NEWTON_STEPS):
        resid = 0.5 * erfc(-x / SQRT2) - q
        x = x - resid / (INV_SQRT_2PI * np.exp(-0.5 * x * x))
    x = np.where(upper, -x, x)
    return float(x[0]) if np.ndim(p) == 0 else x
