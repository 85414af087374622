import math

import numpy as np
import pytest
from scipy import special

from laberrors import DomainError, QuadratureError
from quadrature import (
    DEFAULT_CONFIG,
    QuadConfig,
    integrate_finite,
    integrate_semi_infinite,
    integrate_zero_to_inf,
)


def test_constant_integrand():
    res = integrate_finite(lambda t: np.ones_like(t), 0.0, 1.0)
    assert res.converged
    assert res.value == pytest.approx(1.0, rel=1e-12)


def test_inverse_square_root_singularity():
    res = integrate_finite(lambda t: t ** -0.5, 0.0, 1.0)
    assert res.value == pytest.approx(2.0, rel=1e-10)


def test_power_over_sinh_matches_midpoint_oracle():
    # t = u^10 turns t^0.1/sinh t on (0,1) into the smooth 10 u^10 / sinh(u^10)
    m = 1_000_000
    u = (np.arange(m) + 0.5) / m
    oracle = np.sum(10 * u ** 10 / np.sinh(u ** 10)) / m
    res = integrate_finite(lambda t: t ** 0.1 / np.sinh(t), 0.0, 1.0)
    assert res.value == pytest.approx(oracle, rel=1e-9)


@pytest.mark.parametrize(
    "f,expected",
    [
        (lambda t: np.exp(-t), 1.0),
        (lambda t: 1.0 / np.cosh(t), math.pi / 2),
        (lambda t: t / np.sinh(t), math.pi ** 2 / 4),
    ],
)
def test_half_line(f, expected):
    res = integrate_semi_infinite(f, 0.0)
    assert res.value == pytest.approx(expected, rel=1e-11)


def test_split_is_additive():
    f = lambda t: t ** 1.5 * np.exp(-t)
    whole = integrate_zero_to_inf(f)
    parts = integrate_finite(f, 0.0, 1.0).value + integrate_semi_infinite(f, 1.0).value
    assert whole.value == pytest.approx(parts, rel=1e-12)
    assert whole.value == pytest.approx(special.gamma(2.5), rel=1e-11)


def test_breakpoints_do_not_change_the_value():
    f = lambda t: np.exp(-t) / (1e-4 + (t - 0.3) ** 2)
    plain = integrate_zero_to_inf(f)
    cut = integrate_zero_to_inf(f, breakpoints=(0.3,))
    assert cut.value == pytest.approx(plain.value, rel=1e-9)


def test_converged_result_honours_tolerance():
    res = integrate_zero_to_inf(lambda t: t ** 2.5 / np.sinh(t))
    assert res.converged
    assert res.err_estimate <= max(DEFAULT_CONFIG.rel_tol * abs(res.value), DEFAULT_CONFIG.abs_floor)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 3.0])
@pytest.mark.parametrize("c", [0.5, 2.0])
def test_incomplete_gamma_identity(alpha, c):
    res = integrate_finite(lambda x: x ** (alpha - 1) * np.exp(-alpha * x) * (1 - x), 0.0, c)
    assert res.value == pytest.approx(c ** alpha * math.exp(-alpha * c) / alpha, rel=1e-10)


@pytest.mark.parametrize("alpha", [1.5, 2.0, 5.0])
def test_gamma_moments(alpha):
    lead = special.gamma(alpha) / alpha ** alpha
    assert integrate_zero_to_inf(lambda x: x ** (alpha - 1) * np.exp(-alpha * x)).value == pytest.approx(lead, rel=1e-10)
    assert integrate_zero_to_inf(lambda x: x ** alpha * np.exp(-alpha * x)).value == pytest.approx(lead, rel=1e-10)
    shifted = special.gamma(alpha - 1) / alpha ** (alpha - 1)
    assert integrate_zero_to_inf(lambda x: x ** (alpha - 2) * np.exp(-alpha * x)).value == pytest.approx(shifted, rel=1e-10)


def test_nan_integrand_names_the_abscissa():
    with pytest.raises(QuadratureError) as info:
        integrate_finite(lambda t: np.where(t > 0.5, np.nan, 1.0), 0.0, 1.0)
    assert info.value.abscissa > 0.5


def test_subnormal_values_are_flushed():
    res = integrate_semi_infinite(lambda t: np.exp(-t) + 1e-310 * np.ones_like(t), 0.0)
    assert res.value == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize(
    "kwargs",
    [{"rel_tol": 0.0}, {"abs_floor": -1.0}, {"max_levels": 0}, {"split_point": 0.0}],
)
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        QuadConfig(**kwargs)


def test_reversed_interval_rejected():
    with pytest.raises(DomainError):
        integrate_finite(lambda t: t, 1.0, 0.0)


@pytest.mark.parametrize("s", [1.5, 2.5, 4.0])
def test_power_over_sinh_closed_form(s):
    # int t^s/sinh t = 2 Gamma(s+1) (1 - 2^-(s+1)) zeta(s+1)
    expected = 2 * special.gamma(s + 1) * (1 - 2 ** -(s + 1)) * special.zeta(s + 1)
    res = integrate_zero_to_inf(lambda t: t ** s / np.sinh(t))
    assert res.converged
    assert res.value == pytest.approx(expected, rel=1e-11)


@pytest.mark.parametrize("alpha", [1.5, 2.0, 5.0])
def test_half_line_stops_before_overflow(alpha):
    seen = []

    def f(x):
        seen.append(np.max(x))
        return x ** alpha * np.exp(-alpha * x)

    res = integrate_semi_infinite(f, 1.0)
    assert max(seen) < 1e6
    assert res.value == pytest.approx(special.gammaincc(alpha + 1, alpha) * special.gamma(alpha + 1) / alpha ** (alpha + 1), rel=1e-10)
