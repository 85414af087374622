import math

import pytest

import entire
from entire import SeriesConfig
from laberrors import DomainError

PAIRS = [(a, x) for a in (0.5, 1.5, 2.5, 3.5, 5.0) for x in (0.5, 2.0, 7.0, 15.0)]


@pytest.mark.parametrize("alpha,x", PAIRS)
def test_series_matches_integral(alpha, x):
    series = entire.H_alpha_series(alpha, x)
    integral = entire.H_alpha_integral(alpha, x)
    assert abs(series - integral) <= 1e-6 * max(1.0, x ** alpha)


@pytest.mark.parametrize("k", range(1, 7))
def test_series_interpolates_at_multiples_of_pi(k):
    x = k * math.pi
    assert entire.H_alpha_series(1.5, x) == pytest.approx(x ** 1.5, rel=1e-9)


def test_pole_neighbourhood_is_continuous():
    x = 3 * math.pi
    near = entire.H_alpha_series(0.7, x + 1e-6)
    at = entire.H_alpha_series(0.7, x)
    assert near == pytest.approx(at, rel=1e-5)


@pytest.mark.parametrize("alpha,x", [(0.5, 4.0), (1.5, 1.7), (1.9, 7.0), (3.1, 5.0), (5.3, 15.0)])
def test_pairing_agrees_with_euler(alpha, x):
    pairing = entire.H_alpha_series(alpha, x, SeriesConfig(accel="pairing"))
    assert abs(pairing - entire.H_alpha_series(alpha, x)) <= 1e-6 * max(1.0, x ** alpha)


def test_pairing_remainder_closes_a_known_sum():
    # sum_{k>=1} (-1)^k / k = -log 2 with b(k) = (k pi)^1 / (0 - (k pi)^2)
    tail, err = entire._pair_tail(0.0, 1.0, 1, 1000)
    assert tail * -math.pi == pytest.approx(-math.log(2), abs=1e-12)
    assert err < 1e-12


def test_even_reflection():
    assert entire.H_alpha_series(0.5, -2.0) == entire.H_alpha_series(0.5, 2.0)
    assert entire.H_alpha_integral(0.5, -2.0) == entire.H_alpha_integral(0.5, 2.0)


@pytest.mark.parametrize("k", range(0, 6))
def test_G_alpha_interpolates_at_half_periods(k):
    x = (k + 0.5) * math.pi
    assert entire.G_alpha(0.5, x) == pytest.approx(x ** 0.5, rel=1e-12)


def test_G_alpha_at_zero():
    assert entire.G_alpha(1.0, 0.0) == 0.0


def test_domains():
    with pytest.raises(DomainError):
        entire.H_alpha_series(2.0, 1.0)
    with pytest.raises(DomainError):
        entire.G_alpha(4.0, 1.0)
    with pytest.raises(DomainError):
        SeriesConfig(accel="none")
    with pytest.raises(DomainError):
        entire.beta_point(0.0)


def test_beta_point():
    assert entire.beta_point(1.0) == pytest.approx(1.5 * math.pi)
    assert entire.beta_point(4.0) == pytest.approx(2.5 * math.pi)
