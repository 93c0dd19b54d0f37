import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rauxlab.errors import DomainError
from rauxlab.thetafun import (
    check_kernel_bounds,
    phi,
    phi_direct,
    phi_prime,
    phi_prime_array,
    phi_product,
    phi_transformed,
    theta3,
)

# theta_4(0, e^{-pi x}) and its x-derivative, frozen from a 40-digit evaluation
PHI = [
    (0.1, 0.002455212638766806, 0.18055588652993118),
    (0.5, 0.587974282891712, 1.2592529384330224),
    (1.0, 0.9135791381561168, 0.2714334098572979),
    (2.5, 0.9992235935921919, 0.0024391526665419085),
]


@pytest.mark.parametrize("x, ref, dref", PHI)
def test_phi_reference(x, ref, dref):
    r = phi(x)
    assert abs(r.phi - ref) < 1e-15
    assert abs(r.phi_prime - dref) < 1e-13


def test_branch_switch_at_one():
    assert phi(0.999).series_used == "transformed"
    assert phi(1.0).series_used == "direct"


@given(st.floats(min_value=0.05, max_value=20.0))
@settings(max_examples=80, deadline=None)
def test_dual_series_agree(x):
    assert abs(phi_direct(x) - phi_transformed(x)) < 1e-14


@given(st.floats(min_value=0.05, max_value=10.0))
@settings(max_examples=50, deadline=None)
def test_product_form(x):
    assert abs(phi_product(x) - phi(x).phi) < 1e-14


@given(st.floats(min_value=0.03, max_value=8.0))
@settings(max_examples=50, deadline=None)
def test_vectorised_derivative(x):
    assert abs(phi_prime_array(np.array([x]))[0] - phi_prime(x)) < 1e-13


def test_derivative_by_differences():
    h = 1e-5
    for x in (0.2, 0.9, 2.0):
        fd = (phi(x + h).phi - phi(x - h).phi) / (2 * h)
        assert abs(fd - phi_prime(x)) < 1e-8


def test_phi_domain():
    for bad in (0.0, -1.0, float("nan")):
        with pytest.raises(DomainError):
            phi(bad)


def test_theta3_values():
    v, _ = theta3(1j)
    assert abs(v.value - 1.0864348112133080146) < 1e-15
    v, dv = theta3(0.3 + 0.7j)
    assert abs(v.value - (1.1301275124993487 + 0.17926421604632179j)) < 1e-14
    h = 1e-6
    fd = (theta3(0.3 + 0.7j + h)[0].value - theta3(0.3 + 0.7j - h)[0].value) / (2 * h)
    assert abs(fd - dv.value) < 1e-7


def test_theta3_kernel_relation():
    # theta_3 at tau = -1 + ix is the kernel phi(x)
    for x in (0.4, 1.3):
        assert abs(theta3(complex(-1.0, x))[0].value - phi(x).phi) < 1e-14


def test_theta3_needs_upper_half_plane():
    with pytest.raises(DomainError):
        theta3(0.5 - 0.1j)


def test_inequalities_hold_on_grid():
    rep = check_kernel_bounds(np.linspace(0.05, 5.0, 100))
    assert rep.ok and rep.n_points == 100
    assert rep.min_margin_nonneg > 0


def test_inequality_checker_flags_violations():
    rep = check_kernel_bounds([0.5], slack=-1.0)
    assert not rep.ok
