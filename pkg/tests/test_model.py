from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, strategies as st

from peerreview.model import (Capacity, DynamicPolicy, OneShotPolicy, Population, Quality,
                              Technology, average_cost, interior_margin)


def test_average_cost_examples(pop_a, pop_c):
    assert average_cost(pop_a) == 0.1875
    assert average_cost(pop_c) == 0.375
    assert pop_a.c_bar == 0.1875


def test_average_cost_equal_types():
    # validation forbids equal productivities, so use a bare namespace
    assert average_cost(SimpleNamespace(alpha=0.3, theta_skilled=5.0, theta_unskilled=5.0)) \
        == pytest.approx(0.2, abs=1e-15)


@given(st.floats(0.01, 0.99), st.floats(0.1, 50), st.floats(0.01, 50))
def test_average_cost_is_strict_convex_combination(alpha, t0, extra):
    pop = Population(alpha, t0 + extra, t0)
    c = average_cost(pop)
    assert 1 / pop.theta_skilled < c < 1 / pop.theta_unskilled


@pytest.mark.parametrize("theta,gap,expected", [
    (4.0, 0.3413447, 0.3653788),
    (4.0, 0.25, 0.0),
    (4.0, 3.14e-5, -0.9998744),
])
def test_interior_margin(theta, gap, expected):
    assert interior_margin(theta, gap) == pytest.approx(expected, abs=1e-7)


@given(st.floats(0.1, 20), st.floats(0.0, 1.0), st.floats(0.0, 5.0))
def test_skilled_margin_dominates(t0, gap, extra):
    assert interior_margin(t0 + extra, gap) >= interior_margin(t0, gap)


def test_interior_margin_monotone():
    g = np.linspace(0, 1, 50)
    assert np.all(np.diff(interior_margin(3.0, g)) > 0)
    assert interior_margin(3.0, 0.4) < interior_margin(3.5, 0.4)


@pytest.mark.parametrize("args", [(0.0, 8, 4), (1.0, 8, 4), (0.5, 4, 4), (0.5, 4, 8),
                                  (0.5, 8, 0), (0.5, float("nan"), 4)])
def test_population_validation(args):
    with pytest.raises(ValueError):
        Population(*args)


def test_other_types_validation():
    with pytest.raises(ValueError):
        Technology(0.0)
    with pytest.raises(ValueError):
        Capacity(1.0)
    with pytest.raises(ValueError):
        DynamicPolicy(1.0, -0.1)
    with pytest.raises(ValueError):
        OneShotPolicy(float("inf"))
    assert DynamicPolicy(1.0, 2.5).kappa == 2.5


def test_quality_values():
    assert [int(q) for q in Quality] == [0, 1]
