import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from peerreview.gaussian import std_normal_cdf, std_normal_pdf, std_normal_quantile

# mpmath, 50 digits (tests/mp_oracle.py)
PHI_1 = 0.841344746068543
PDF_0 = 0.398942280401433
PDF_1 = 0.241970724519143
Q_0975 = 1.95996398454005
Q_08413447 = 0.999999809611106


def test_cdf_values():
    assert std_normal_cdf(0.0) == 0.5
    assert std_normal_cdf(1.0) == pytest.approx(PHI_1, abs=1e-12)
    assert std_normal_cdf(-1.0) == pytest.approx(1 - PHI_1, abs=1e-12)


def test_pdf_values():
    assert std_normal_pdf(0.0) == pytest.approx(PDF_0, abs=1e-15)
    assert std_normal_pdf(1.0) == pytest.approx(PDF_1, abs=1e-15)


def test_quantile_values():
    assert std_normal_quantile(0.5) == 0.0
    assert std_normal_quantile(0.8413447) == pytest.approx(1.0, abs=1e-6)
    assert std_normal_quantile(0.8413447) == pytest.approx(Q_08413447, abs=1e-12)
    assert std_normal_quantile(0.975) == pytest.approx(Q_0975, abs=1e-12)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(bad):
    for fn in (std_normal_cdf, std_normal_pdf, std_normal_quantile):
        with pytest.raises(ValueError):
            fn(bad)


@pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5, 1e-13, 1 - 1e-13])
def test_quantile_rejects_outside_band(p):
    with pytest.raises(ValueError):
        std_normal_quantile(p)


def test_quantile_accepts_band_edges():
    assert std_normal_quantile(1e-12) == pytest.approx(-7.034483825, abs=1e-8)
    assert std_normal_quantile(1 - 1e-12) < 7.04


def test_round_trip_grid(rng):
    x = rng.uniform(-6, 6, 10_000)
    assert np.max(np.abs(std_normal_quantile(std_normal_cdf(x)) - x)) <= 1e-8


def test_cdf_inverse_relation(rng):
    p = rng.uniform(1e-6, 1 - 1e-6, 2000)
    assert np.max(np.abs(std_normal_cdf(std_normal_quantile(p)) - p)) <= 1e-9


def test_monotone_on_grid():
    x = np.linspace(-8, 7, 4001)
    assert np.all(np.diff(std_normal_cdf(x)) > 0)
    # upper tail rounds to 1.0 in double precision; ordering is kept
    assert np.all(np.diff(std_normal_cdf(np.linspace(7, 12, 100))) >= 0)
    p = np.linspace(1e-12, 1 - 1e-12, 4001)
    assert np.all(np.diff(std_normal_quantile(p)) > 0)


def test_pdf_is_cdf_derivative():
    x = np.linspace(-4, 4, 801)
    h = 1e-5
    fd = (std_normal_cdf(x + h) - std_normal_cdf(x - h)) / (2 * h)
    assert np.max(np.abs(fd - std_normal_pdf(x))) <= 1e-6


@given(st.floats(-30, 30))
def test_cdf_symmetry(x):
    assert std_normal_cdf(x) + std_normal_cdf(-x) == pytest.approx(1.0, abs=1e-15)
    assert std_normal_pdf(x) == std_normal_pdf(-x)


def test_cdf_tail_ordering_beyond_eight():
    x = np.array([-12.0, -10.0, -8.5, -8.0])
    assert np.all(np.diff(std_normal_cdf(x)) > 0)
    assert std_normal_cdf(-10.0) > 0.0


def test_scalars_stay_scalars():
    assert isinstance(std_normal_cdf(0.3), float)
    assert isinstance(std_normal_quantile(0.3), float)
    assert std_normal_cdf(np.array([0.0, 1.0])).shape == (2,)
