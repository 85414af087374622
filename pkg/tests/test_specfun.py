import math

import numpy as np
import pytest

import specfun
from laberrors import DomainError
from quadrature import integrate_zero_to_inf


def test_gamma_classical_values():
    assert specfun.gamma(5.0) == pytest.approx(24.0, rel=1e-14)
    assert specfun.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_matches_euler_integral():
    oracle = integrate_zero_to_inf(lambda t: np.exp(9.3 * np.log(t) - t)).value
    assert specfun.gamma(10.3) == pytest.approx(oracle, rel=1e-11)


def test_gamma_errors():
    with pytest.raises(DomainError):
        specfun.gamma(0.0)
    with pytest.raises(OverflowError):
        specfun.gamma(200.0)


@pytest.mark.parametrize("alpha,expected", [(2.0, math.pi ** 2 / 6), (4.0, math.pi ** 4 / 90)])
def test_zeta(alpha, expected):
    assert specfun.zeta(alpha) == pytest.approx(expected, abs=1e-13)


def test_zeta_partial_sum_oracle():
    n = np.arange(1, 10 ** 6 + 1, dtype=float)
    head = np.sum(n[::-1] ** -2.6)
    # Euler-Maclaurin tail after N terms
    N = 1e6
    tail = N ** -1.6 / 1.6 - 0.5 * N ** -2.6
    assert specfun.zeta(2.6) == pytest.approx(head + tail, abs=1e-13)


def test_zeta_domain():
    with pytest.raises(DomainError):
        specfun.zeta(1.0)


def test_odd_zeta():
    assert specfun.odd_zeta(2.0) == pytest.approx(math.pi ** 2 / 4, abs=1e-13)
    assert specfun.odd_zeta(3.0) == pytest.approx(specfun.zeta(3.0) * 1.75, abs=1e-13)
    assert specfun.odd_zeta(80.0) == pytest.approx(2.0, abs=1e-13)


def test_alternating_odd_sum():
    assert specfun.alternating_odd_sum(1.0) == pytest.approx(math.pi ** 3 / 32, abs=1e-13)
    assert specfun.alternating_odd_sum(0.0) == pytest.approx(0.915965594177219, abs=1e-13)
    assert specfun.alternating_odd_sum(60.0) == pytest.approx(1.0, abs=1e-13)


def test_alternating_odd_sum_direct_summation():
    n = np.arange(200000)
    direct = np.sum((-1.0) ** n / (1.0 + 2.0 * n) ** 3.5)
    assert specfun.alternating_odd_sum(1.5) == pytest.approx(direct, abs=1e-13)


def test_chebyshev_values():
    assert specfun.chebyshev_T(7, 1.0) == pytest.approx(1.0)
    assert specfun.chebyshev_T(2, 0.5) == pytest.approx(-0.5)
    with pytest.raises(DomainError):
        specfun.chebyshev_T(2, 1.5)


def test_chebyshev_recurrence():
    rng = np.random.default_rng(7)
    n = rng.integers(1, 50, size=100)
    x = rng.uniform(-1, 1, size=100)
    lhs = np.array([specfun.chebyshev_T(k + 1, v) for k, v in zip(n, x)])
    rhs = np.array([2 * v * specfun.chebyshev_T(k, v) - specfun.chebyshev_T(k - 1, v) for k, v in zip(n, x)])
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


@pytest.mark.parametrize("alpha", [1.0, 2.0, 5.0, 20.0])
def test_stirling_lower_bound(alpha):
    assert specfun.gamma(alpha) > math.sqrt(2 * math.pi / alpha) * (alpha / math.e) ** alpha


@pytest.mark.parametrize("alpha", [1.5, 2.0, 5.0, 10.0])
def test_zeta_bounds(alpha):
    assert 1 < specfun.zeta(alpha) < specfun.zeta_upper_bound(alpha)
