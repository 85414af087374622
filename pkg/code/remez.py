"""
remez.py
Best uniform approximation of |x|^alpha on [-b, b] by even polynomials

Works in y = x^2: y^(alpha/2) on [0, b^2] is approximated by a degree-n
polynomial in y (degree 2n in x). The reference holds n+2 points, one of them
at y = 0. Polynomials are kept as Chebyshev series on [0, b^2].
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as C

from laberrors import ConvergenceError, DomainError, InvariantError
from searching import golden_max_many, local_max_indices

logger = logging.getLogger(__name__)

#Bernstein constants lim (2n)^alpha E_2n from high-precision literature values
DELTA_INF = {0.5: 0.348648, 1.0: 0.2801694990238691}

REL_TOL = 1e-10
#accepted with a warning when the exchange stalls above REL_TOL
LOOSE_TOL = 1e-6
MAX_ITER = 50
GRID_PER_DEGREE = 50
POLISH_XTOL = 1e-14


@dataclass(frozen=True, eq=False)
class ReferenceSet:
    points: np.ndarray
    leveled_error: float
    signs: np.ndarray
    #signed error |x|^alpha - p(x^2) at each point
    errors: np.ndarray


@dataclass(frozen=True, eq=False)
class BestApprox:
    alpha: float
    degree_2n: int
    coeffs: np.ndarray
    E_n: float
    reference: ReferenceSet
    b: float = 1.0
    iterations: int = 0

    def __post_init__(self):
        even = float(self.alpha).is_integer() and int(self.alpha) % 2 == 0
        if not even and not self.E_n > 0:
            raise InvariantError(f"best error must be positive for alpha={self.alpha}")

    def __call__(self, x):
        """ value of the best polynomial at x in [-b, b] """
        y = np.asarray(x, dtype=float) ** 2
        return C.chebval(_toUnit(y, self.b), self.coeffs)


def _toUnit(y, b):
    return 2.0 * y / (b * b) - 1.0


def initial_reference(m, b=1.0):
    """ m+2 Chebyshev extrema of [0, b^2], ascending """
    j = np.arange(m + 2)[::-1]
    return b * b * (1.0 + np.cos(j * math.pi / (m + 1))) / 2.0


def build_linear_system(m, ys, fys, b):
    '''
    Equations sum_k c_k T_k(s(y_i)) + (-1)^i h = f(y_i), i = 0..m+1
    Returns (matrix, right hand side); unknowns are (c_0..c_m, h)
    '''
    vander = C.chebvander(_toUnit(ys, b), m)
    signs = np.where(np.arange(m + 2) % 2 == 0, 1.0, -1.0)
    return np.column_stack([vander, signs]), fys


def _error(coeffs, alpha, b):
    return lambda x: np.abs(x) ** alpha - C.chebval(_toUnit(np.asarray(x) ** 2, b), coeffs)


def _extrema(err, b, m):
    ''' signed error at x = 0, x = b and every polished interior extremum, by increasing x '''
    theta = np.linspace(0.0, math.pi / 2, GRID_PER_DEGREE * max(m, 1) + 1)
    xs = b * np.sin(theta)
    xs[-1] = b
    values = err(xs)
    idx = local_max_indices(np.abs(values))
    px, pv = golden_max_many(lambda x: np.abs(err(x)), xs[idx - 1], xs[idx + 1], POLISH_XTOL * b)
    better = pv >= np.abs(values[idx])
    px = np.where(better, px, xs[idx])
    points = np.concatenate([[0.0], px, [b]])
    return points, err(points)


def select_alternating(points, errors, count):
    '''
    Reduce extrema to an alternating set of `count` points
    Runs of equal sign keep their largest |error|; surplus points are dropped
    from whichever end has the smaller |error|
    '''
    keepX, keepE = [], []
    for x, e in zip(points, errors):
        if keepE and np.sign(e) == np.sign(keepE[-1]):
            if abs(e) > abs(keepE[-1]):
                keepX[-1], keepE[-1] = x, e
            continue
        keepX.append(x)
        keepE.append(e)
    while len(keepX) > count:
        if abs(keepE[0]) < abs(keepE[-1]):
            keepX.pop(0)
            keepE.pop(0)
        else:
            keepX.pop()
            keepE.pop()
    return np.array(keepX), np.array(keepE)


def _exact(alpha, n, b):
    # y^(alpha/2) is itself a polynomial of degree alpha/2 <= n
    k = int(round(alpha / 2))
    ys = initial_reference(n, b)
    coeffs = C.chebfit(_toUnit(ys, b), ys ** k, n)
    signs = np.where(np.arange(n + 2) % 2 == 0, 1.0, -1.0)
    ref = ReferenceSet(ys, 0.0, signs, np.zeros(n + 2))
    return BestApprox(alpha, 2 * n, coeffs, 0.0, ref, b, 0)


def best_poly(alpha, n, b=1.0, rel_tol=REL_TOL, max_iter=MAX_ITER):
    '''
    Remez exchange for the best even approximation of |x|^alpha of degree 2n
    Input:
        alpha - exponent > 0
        n - degree in y = x^2 (n = 0 gives the best constant)
        b - half-width of the interval [-b, b]
        rel_tol - stop once max|error| <= |h| (1 + rel_tol)
        max_iter - exchange steps
    '''
    if not alpha > 0:
        raise DomainError(f"best_poly needs alpha > 0, got {alpha}")
    if int(n) != n or n < 0:
        raise DomainError(f"best_poly needs an integer n >= 0, got {n}")
    if not b > 0:
        raise DomainError(f"best_poly needs b > 0, got {b}")
    n = int(n)
    half = alpha / 2
    if float(half).is_integer() and half <= n:
        return _exact(alpha, n, b)

    ys = initial_reference(n, b)
    gap = math.inf
    for iteration in range(1, max_iter + 1):
        matrix, rhs = build_linear_system(n, ys, ys ** half, b)
        solution = np.linalg.solve(matrix, rhs)
        coeffs, h = solution[:-1], solution[-1]
        err = _error(coeffs, alpha, b)
        points, errors = _extrema(err, b, n)
        maxerr = float(np.max(np.abs(errors)))
        gap = (maxerr - abs(h)) / abs(h) if h != 0 else math.inf
        logger.debug("remez alpha=%g n=%d iter=%d h=%r max=%r gap=%g", alpha, n, iteration, h, maxerr, gap)

        refX, refE = select_alternating(points, errors, n + 2)
        if refX.size < n + 2:
            raise ConvergenceError(f"remez lost alternation at iteration {iteration} (alpha={alpha}, n={n})",
                                   partial=ys)
        reference = ReferenceSet(refX ** 2, float(h), np.sign(refE), refE)
        if gap <= rel_tol:
            return BestApprox(alpha, 2 * n, coeffs, maxerr, reference, b, iteration)
        newYs = refX ** 2
        if np.array_equal(newYs, ys):
            break
        ys = newYs

    if gap <= LOOSE_TOL:
        logger.warning("remez alpha=%g n=%d stopped at relative gap %g", alpha, n, gap)
        return BestApprox(alpha, 2 * n, coeffs, maxerr, reference, b, iteration)
    raise ConvergenceError(f"remez stagnated at relative gap {gap:.3g} (alpha={alpha}, n={n})", partial=reference)


def scaling_check(alpha, n, b):
    """ E_n on [-b, b] over E_n on [-1, 1]; equals b^alpha """
    return best_poly(alpha, n, b).E_n / best_poly(alpha, n).E_n


def scaled_errors(alpha, n_list):
    """ [(n, E_2n, (2n)^alpha E_2n)] for each n """
    rows = []
    for n in n_list:
        e = best_poly(alpha, n).E_n
        rows.append((n, e, (2 * n) ** alpha * e))
    return rows


def bernstein_extrapolate(alpha, n_list):
    '''
    Estimate lim (2n)^alpha E_2n by a least-squares fit s_n = D + b/n + c/n^2
    Input:
        alpha - exponent
        n_list - at least 3 increasing values of n
    '''
    n_list = list(n_list)
    if len(n_list) < 3:
        raise DomainError("bernstein_extrapolate needs at least 3 values of n")
    rows = scaled_errors(alpha, n_list)
    ns = np.array([r[0] for r in rows], dtype=float)
    s = np.array([r[2] for r in rows])
    if not np.any(s):
        return 0.0
    design = np.column_stack([np.ones_like(ns), 1.0 / ns, 1.0 / ns ** 2])
    fit, *_ = np.linalg.lstsq(design, s, rcond=None)
    return float(fit[0])
