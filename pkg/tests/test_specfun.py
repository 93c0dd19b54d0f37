import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rauxlab.errors import DomainError, PoleError, PrecisionError
from rauxlab.specfun import (
    EvalResult,
    _borwein_weights,
    as_point,
    digamma,
    euler_gamma,
    log_gamma,
    riemann_siegel_theta,
    theta,
    theta_prime,
    z_from_oracle,
    zeta_line_oracle,
)

# frozen from a 40-digit multiprecision evaluation
LOG_GAMMA = [
    (0.25 + 0.5j, 0.3402504204084198 - 1.1951830098875904j),
    (-3.7 + 2.1j, -6.992771008252736 - 10.095443779952701j),
    (10 - 300j, -416.13244313571425 - 1425.907054713592j),
    (0.5 + 1000j, -1569.877388261692 + 5907.755320648806j),
]
DIGAMMA = [
    (0.25, -4.2274535333762655),
    (-2.5 + 1j, 1.1546043967509456 + 2.8105638599909457j),
    (3 + 40j, 3.690803033115453 + 1.5083742861750222j),
]
THETA = [(1.0, -1.7675479528122904), (100.0, 87.97216523178722), (1000.0, 2034.5464280380315), (-50.0, -26.46136607016141)]
ZETA = [
    (3.0, 0.5327366709742328 - 0.07889651342583338j),
    (100.0, 2.692619885681324 - 0.020386029602598162j),
    (500.5, 0.6880679031941155 + 0.14235713519987603j),
]


@pytest.mark.parametrize("z, ref", LOG_GAMMA)
def test_log_gamma_reference(z, ref):
    r = log_gamma(z)
    assert abs(r.value - ref) <= 1e-12 * max(1.0, abs(ref))
    assert r.abs_err < 1e-9


@pytest.mark.parametrize("z, ref", DIGAMMA)
def test_digamma_reference(z, ref):
    assert abs(digamma(z).value - ref) < 1e-13


@pytest.mark.parametrize("z", [0, -1, -7])
def test_poles_raise(z):
    with pytest.raises(PoleError):
        log_gamma(z)
    with pytest.raises(PoleError):
        digamma(z)


def test_non_finite_point_rejected():
    with pytest.raises(DomainError):
        as_point(complex(float("nan"), 0))
    with pytest.raises(DomainError):
        log_gamma(float("inf"))


def test_eval_result_rejects_negative_error():
    with pytest.raises(ValueError):
        EvalResult(1.0, -1e-3, "x")
    assert not EvalResult(1.0, math.inf, "x").ok


@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=200, allow_nan=False, allow_infinity=False))
@settings(max_examples=60, deadline=None)
def test_log_gamma_recurrence(z):
    if z.imag == 0 and z.real <= 0:
        return
    # log Gamma(z+1) = log Gamma(z) + log z modulo 2 pi i
    d = log_gamma(z + 1).value - log_gamma(z).value - cmath.log(z)
    k = round(d.imag / (2 * math.pi))
    assert abs(d - 2j * math.pi * k) < 1e-10 * max(1.0, abs(log_gamma(z).value))


@given(st.floats(min_value=-3000, max_value=3000, allow_nan=False))
@settings(max_examples=60, deadline=None)
def test_theta_is_odd(t):
    assert theta(-t) == -theta(t)


@pytest.mark.parametrize("t, ref", THETA)
def test_theta_reference(t, ref):
    assert abs(theta(t) - ref) < 1e-12 * max(1.0, abs(ref))


def test_theta_zero_and_minimum():
    assert theta(0.0) == 0.0
    # theta decreases to its minimum near t = 17.8456 and then increases
    assert abs(theta(17.8455995405)) < 1e-9
    assert theta_prime(5.0) < 0 < theta_prime(20.0)


def test_theta_prime_matches_difference():
    h = 1e-5
    for t in (3.0, 40.0, 700.0):
        fd = (theta(t + h) - theta(t - h)) / (2 * h)
        assert abs(fd - theta_prime(t)) < 1e-8


def test_euler_gamma():
    assert euler_gamma() == 0.5772156649015329


def test_borwein_weights_in_unit_interval():
    w = _borwein_weights(200)
    assert np.all((w >= 0) & (w <= 1))
    assert w[0] > w[-1]


@pytest.mark.parametrize("t, ref", ZETA)
def test_zeta_oracle_reference(t, ref):
    r = zeta_line_oracle(t)
    assert abs(r.value - ref) < 1e-10
    assert r.abs_err <= 1e-9


def test_zeta_oracle_vanishes_at_first_zero():
    assert abs(zeta_line_oracle(14.134725141734693).value) < 1e-12


def test_zeta_oracle_reports_unreachable_target():
    with pytest.raises(PrecisionError):
        zeta_line_oracle(100.0, depth=20)


def test_zeta_oracle_range():
    with pytest.raises(DomainError):
        zeta_line_oracle(6000.0)


def test_hardy_z_is_real_and_signed():
    assert z_from_oracle(10.0).value.real < 0 < z_from_oracle(17.0).value.real
