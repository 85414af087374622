import math

import numpy as np
import pytest
from numpy.polynomial import chebyshev as C
from scipy.optimize import linprog

import remez
from laberrors import DomainError, InvariantError
from remez import BestApprox, ReferenceSet


def lpBestError(alpha, n, points=2001):
    ''' minimax error of |x|^alpha by even degree-2n polynomials on a discrete grid, as a linear program '''
    x = np.sin(np.linspace(0, math.pi / 2, points))
    V = C.chebvander(2 * x ** 2 - 1, n)
    f = x ** alpha
    ones = np.ones((points, 1))
    #unknowns (c_0..c_n, h); minimize h subject to |f - V c| <= h
    A = np.vstack([np.hstack([V, -ones]), np.hstack([-V, -ones])])
    b = np.concatenate([f, -f])
    cost = np.zeros(n + 2)
    cost[-1] = 1.0
    res = linprog(cost, A_ub=A, b_ub=b, bounds=[(None, None)] * (n + 1) + [(0, None)], method="highs")
    return res.fun


def test_quadratic_approximation_of_abs():
    best = remez.best_poly(1.0, 1)
    assert best.E_n == pytest.approx(0.125, abs=1e-8)
    # best quadratic is x^2 + 1/8
    assert best(0.0) == pytest.approx(0.125, abs=1e-8)
    assert best(1.0) == pytest.approx(1.125, abs=1e-8)


@pytest.mark.parametrize("alpha,n", [(1.0, 4), (0.5, 3), (1.5, 5)])
def test_against_linear_program(alpha, n):
    best = remez.best_poly(alpha, n)
    lp = lpBestError(alpha, n)
    assert lp <= best.E_n * (1 + 1e-6)
    assert best.E_n == pytest.approx(lp, rel=1e-3)


def test_equioscillation():
    best = remez.best_poly(0.7, 6)
    ref = best.reference
    assert ref.points.size == 8
    np.testing.assert_allclose(np.abs(ref.errors), best.E_n, rtol=1e-8)
    assert np.all(ref.signs[:-1] * ref.signs[1:] < 0)


def test_even_integer_alpha_is_exact():
    best = remez.best_poly(4.0, 3)
    assert best.E_n == 0.0
    x = np.linspace(-1, 1, 11)
    np.testing.assert_allclose(best(x), x ** 4, atol=1e-13)


def test_scaling_to_a_wider_interval():
    assert remez.scaling_check(1.5, 4, 2.0) == pytest.approx(2.0 ** 1.5, rel=1e-8)


def test_scaled_errors_rows():
    rows = remez.scaled_errors(1.0, [1, 2])
    assert [r[0] for r in rows] == [1, 2]
    assert rows[0][2] == pytest.approx(2 * rows[0][1])


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_bernstein_extrapolation(alpha):
    estimate = remez.bernstein_extrapolate(alpha, [8, 16, 32, 64])
    assert estimate == pytest.approx(remez.DELTA_INF[alpha], abs=0.005)


def test_domain_errors():
    with pytest.raises(DomainError):
        remez.best_poly(0.0, 2)
    with pytest.raises(DomainError):
        remez.best_poly(1.0, -1)
    with pytest.raises(DomainError):
        remez.bernstein_extrapolate(1.0, [4, 8])


def test_positive_error_invariant():
    ref = ReferenceSet(np.zeros(3), 0.0, np.ones(3), np.zeros(3))
    with pytest.raises(InvariantError):
        BestApprox(1.0, 2, np.zeros(2), 0.0, ref)
