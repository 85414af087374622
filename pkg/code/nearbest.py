"""
nearbest.py
Near-best approximation of |x|^alpha by the combination

    P3 = c1 P1 + (1 - c1) P2 + (2/pi) sin(pi alpha/2) c2 (-1)^n (2n)^-alpha T_{2n+1}(x) / ((2n+1) x)

whose scaled error tends to

    L(x) = (2/pi) sin(pi alpha/2) [ c1 cos x A0(alpha,x) + (1-c1) sin x H1(alpha,x) - c2 sin x / x ]

(c1, c2) are chosen to minimize sup |L| over the half-line; the zeros of L are
approximate best interpolation points x_j*, its extrema the alternation points y_j*.
"""

import functools
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize
from scipy.interpolate import make_interp_spline

import chebinterp
import kernels
import specfun
from entire import is_even_integer
from kernels import KernelKind
from laberrors import ConvergenceError, DomainError, InvariantError
from quadrature import DEFAULT_CONFIG
from remez import DELTA_INF
from searching import golden_max, golden_max_many, local_max_indices, sign_change_brackets

logger = logging.getLogger(__name__)

#published (c1, c2) per alpha
C_TABLE = {
    0.1: (0.43, 4.40), 0.2: (0.39, 2.05), 0.3: (0.36, 1.32), 0.4: (0.34, 0.97),
    0.5: (0.33, 0.78), 0.6: (0.31, 0.65), 0.7: (0.30, 0.57), 0.8: (0.28, 0.51),
    0.9: (0.27, 0.48), 1.0: (0.26, 0.45), 1.1: (0.25, 0.44), 1.2: (0.22, 0.42),
    1.3: (0.22, 0.41), 1.4: (0.21, 0.41), 1.5: (0.19, 0.41), 1.6: (0.17, 0.42),
    1.7: (0.15, 0.44), 1.8: (0.12, 0.46), 1.9: (0.10, 0.49),
}

#published x_1* .. x_10*
X_STAR_TABLE = {
    0.5: (0.13, 2.10, 4.99, 8.04, 11.13, 14.25, 17.37, 20.50, 23.63, 26.76),
    0.8: (0.25, 2.30, 5.15, 8.16, 11.22, 14.32, 17.43, 20.55, 23.67, 26.80),
    1.0: (0.34, 2.38, 5.24, 8.23, 11.28, 14.36, 17.47, 20.58, 23.70, 26.83),
}

X_HORIZON = 40 * math.pi
GRID_STEP = math.pi / 40
LOG_GRID_START = 1e-4
#relative step of the logarithmic part of the grid
LOG_GRID_STEP = 0.015
SPLINE_DEGREE = 5
POLISH_XTOL = 1e-10
ROOT_XTOL = 1e-8
ROOT_SCAN_STEP = math.pi / 100
J_MAX = 10

COARSE_C1 = np.linspace(0.0, 0.6, 41)
COARSE_C2 = np.linspace(0.0, 5.0, 41)
SIMPLEX_XATOL = 1e-4
SIMPLEX_FATOL = 1e-10
SIMPLEX_MAXITER = 600


def _sinFactor(alpha):
    return 2.0 / math.pi * math.sin(math.pi * alpha / 2.0)


def _check_alpha(alpha):
    if not alpha > 0 or is_even_integer(alpha):
        raise DomainError(f"alpha must be positive and not an even integer, got {alpha}")


def cache_grid():
    ''' Logarithmic grid from LOG_GRID_START up to where its step reaches GRID_STEP, then uniform to X_HORIZON '''
    x_switch = GRID_STEP / LOG_GRID_STEP
    count = int(math.ceil(math.log(x_switch / LOG_GRID_START) / math.log1p(LOG_GRID_STEP)))
    logpart = x_switch * (1.0 + LOG_GRID_STEP) ** -np.arange(count, 0, -1)
    uniform = np.linspace(x_switch, X_HORIZON, int(math.ceil((X_HORIZON - x_switch) / GRID_STEP)) + 1)
    return np.concatenate([logpart, uniform])


@dataclass(frozen=True, eq=False)
class GridCache:
    alpha: float
    xs: np.ndarray
    a0: np.ndarray
    h1: np.ndarray
    C: float
    D: float
    #sin-factor weighted terms cos x A0, sin x H1, sin x / x on the grid
    terms: tuple = field(init=False, repr=False)
    _splines: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if np.max(np.diff(self.xs)) > GRID_STEP * (1 + 1e-12):
            raise InvariantError(f"grid step exceeds pi/40 for alpha={self.alpha}")
        s = np.log(self.xs)
        splines = (make_interp_spline(s, np.log(self.a0), k=SPLINE_DEGREE),
                   make_interp_spline(s, np.log(self.h1), k=SPLINE_DEGREE))
        object.__setattr__(self, "_splines", splines)
        object.__setattr__(self, "terms", _terms(self.alpha, self.xs, self.a0, self.h1))

    def kernel_values(self, x):
        """ (A0(alpha,x), H1(alpha,x)) for x > 0; spline inside the grid, quadrature outside """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        a0 = np.empty_like(x)
        h1 = np.empty_like(x)
        inside = (x >= self.xs[0]) & (x <= self.xs[-1])
        s = np.log(x[inside])
        a0[inside] = np.exp(self._splines[0](s))
        h1[inside] = np.exp(self._splines[1](s))
        for i in np.nonzero(~inside)[0]:
            a0[i] = kernels.kernel_eval(KernelKind.A0, self.alpha, x[i])
            h1[i] = kernels.kernel_eval(KernelKind.H1, self.alpha, x[i])
        return a0, h1


def _terms(alpha, x, a0, h1):
    s = _sinFactor(alpha)
    return s * np.cos(x) * a0, s * np.sin(x) * h1, s * np.sin(x) / x


def build_cache(alpha, cfg=DEFAULT_CONFIG):
    """ A0 and H1 on the cache grid for one alpha """
    _check_alpha(alpha)
    xs = cache_grid()
    logger.debug("building grid cache for alpha=%g on %d points", alpha, xs.size)
    a0 = kernels.kernel_grid(KernelKind.A0, alpha, xs, cfg)
    h1 = kernels.kernel_grid(KernelKind.H1, alpha, xs, cfg)
    return GridCache(alpha, xs, a0, h1, kernels.C_const(alpha, cfg), kernels.D_const(alpha, cfg))


def limit_terms(alpha, x, cache=None):
    '''
    The three basis functions of the limit error at x >= 0
        (2/pi) sin(pi alpha/2) cos x A0,  ... sin x H1,  ... sin x / x
    The x -> 0 limits are (0, 0, (2/pi) sin(pi alpha/2))
    '''
    _check_alpha(alpha)
    if cache is not None and cache.alpha != alpha:
        raise DomainError(f"cache was built for alpha={cache.alpha}, not {alpha}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x < 0):
        raise DomainError("limit_error needs x >= 0")
    t1, t2, t3 = np.zeros_like(x), np.zeros_like(x), np.full_like(x, _sinFactor(alpha))
    pos = x > 0
    if np.any(pos):
        xp = x[pos]
        if cache is not None:
            a0, h1 = cache.kernel_values(xp)
        else:
            a0 = kernels.kernel_grid(KernelKind.A0, alpha, xp)
            h1 = kernels.kernel_grid(KernelKind.H1, alpha, xp)
        t1[pos], t2[pos], t3[pos] = _terms(alpha, xp, a0, h1)
    return t1, t2, t3


def limit_error(alpha, c1, c2, x, cache=None):
    '''
    Scaled limit of |x|^alpha - P3 at x >= 0
    Input:
        alpha - positive, not an even integer
        c1, c2 - combination weights
        x - scalar or array
        cache - optional GridCache for this alpha
    '''
    t1, t2, t3 = limit_terms(alpha, x, cache)
    err = c1 * t1 + (1.0 - c1) * t2 - c2 * t3
    if np.ndim(x) == 0:
        return float(err[0])
    return err.reshape(np.shape(x))


def far_field(cache, c1):
    """ limsup of |limit_error| as x -> inf: A0 increases to D while H1 and sin x/x decay """
    return abs(_sinFactor(cache.alpha)) * abs(c1) * cache.D


def tail_bound(cache, c1, c2):
    """ bound on |limit_error| beyond the grid, using A0 <= D and H1 <= C/x """
    X = cache.xs[-1]
    return abs(_sinFactor(cache.alpha)) * (abs(c1) * cache.D + abs(1 - c1) * cache.C / X + abs(c2) / X)


def sup_on_grid(cache, c1, c2):
    '''
    sup over (0, X] of |limit_error| and its argmax
    Grid maxima are polished by golden-section search on the cached interpolants
    '''
    t1, t2, t3 = cache.terms
    values = np.abs(c1 * t1 + (1 - c1) * t2 - c2 * t3)
    best_x, best_v = 0.0, abs(c2 * _sinFactor(cache.alpha))
    i = int(np.argmax(values))
    if values[i] > best_v:
        best_x, best_v = float(cache.xs[i]), float(values[i])
    idx = local_max_indices(values)
    if idx.size:
        absErr = lambda x: np.abs(limit_error(cache.alpha, c1, c2, x, cache))
        px, pv = golden_max_many(absErr, cache.xs[idx - 1], cache.xs[idx + 1], POLISH_XTOL)
        j = int(np.argmax(pv))
        if pv[j] > best_v:
            best_x, best_v = float(px[j]), float(pv[j])
    return best_x, best_v


def objective(cache, c1, c2):
    """ J(c1, c2): the polished grid sup or the far-field amplitude, whichever is larger """
    return max(sup_on_grid(cache, c1, c2)[1], far_field(cache, c1))


def coarse_search(cache, c1_grid=COARSE_C1, c2_grid=COARSE_C2):
    ''' Unpolished J on a (c1, c2) grid, all pairs at once; returns (c1, c2, J) at the grid minimum '''
    t1, t2, t3 = cache.terms
    c1 = c1_grid[:, None, None]
    c2 = c2_grid[None, :, None]
    err = c1 * (t1 - t2) + t2 - c2 * t3
    J = np.abs(err).max(axis=2)
    s = abs(_sinFactor(cache.alpha))
    J = np.maximum(J, s * np.abs(c2_grid)[None, :])
    J = np.maximum(J, s * np.abs(c1_grid)[:, None] * cache.D)
    i, j = np.unravel_index(int(np.argmin(J)), J.shape)
    return float(c1_grid[i]), float(c2_grid[j]), float(J[i, j])


@dataclass(frozen=True)
class NearBestSolution:
    alpha: float
    c1: float
    c2: float
    minimax: float
    interp_points: tuple
    #(y_j, signed error), y_0 = 0
    alternation_points: tuple
    equioscillation_spread: float
    tail_bound: float = 0.0
    delta_ref: float = None

    def __post_init__(self):
        xs = self.interp_points
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise InvariantError(f"interpolation points not increasing for alpha={self.alpha}")
        for j, x in enumerate(xs, start=1):
            if j >= 2 and not (j - 1.5) * math.pi <= x <= (j - 0.5) * math.pi:
                raise InvariantError(f"x_{j}* = {x} outside [{j - 1.5}pi, {j - 0.5}pi]")
        for j, (y, _) in enumerate(self.alternation_points):
            if j >= 1 and not (j - 1) * math.pi <= y <= j * math.pi:
                raise InvariantError(f"y_{j}* = {y} outside [{j - 1}pi, {j}pi]")
        if self.delta_ref is not None and self.minimax < self.delta_ref:
            raise InvariantError(f"near-best error {self.minimax} below the best error {self.delta_ref}")


def interp_points(alpha, c1, c2, j_max=J_MAX, cache=None):
    '''
    First j_max positive zeros of limit_error
    Sign changes are bracketed on a pi/100 scan (geometric near 0) and bisected to ROOT_XTOL
    '''
    if j_max < 1:
        raise DomainError(f"j_max must be positive, got {j_max}")
    cache = cache if cache is not None else build_cache(alpha)
    near0 = np.geomspace(1e-10, ROOT_SCAN_STEP, 41)[:-1]
    scan = np.concatenate([near0, np.arange(1, int(X_HORIZON / ROOT_SCAN_STEP) + 1) * ROOT_SCAN_STEP])
    values = limit_error(alpha, c1, c2, scan, cache)
    err = lambda x: limit_error(alpha, c1, c2, x, cache)
    roots = []
    for a, b in sign_change_brackets(scan, values):
        roots.append(b if err(b) == 0 else optimize.bisect(err, a, b, xtol=ROOT_XTOL))
        if len(roots) == j_max:
            return roots
    raise ConvergenceError(f"only {len(roots)} zeros of the limit error in (0, {X_HORIZON:.4g}]", partial=roots)


def alternation_points(alpha, c1, c2, j_max=J_MAX, cache=None, roots=None):
    '''
    y_0 = 0 and the extremum of |limit_error| between each pair of consecutive zeros
    Returns (points, spread): points are (y_j, signed error), spread is max - min of |error|
    '''
    cache = cache if cache is not None else build_cache(alpha)
    roots = roots if roots is not None else interp_points(alpha, c1, c2, j_max, cache)
    err = lambda x: limit_error(alpha, c1, c2, x, cache)
    points = [(0.0, err(0.0))]
    for a, b in zip(roots, roots[1:]):
        y, _ = golden_max(lambda x: abs(err(x)), a, b, POLISH_XTOL)
        points.append((float(y), err(y)))
    mags = [abs(e) for _, e in points]
    return points, max(mags) - min(mags)


def optimize_c(alpha, cache=None, j_max=J_MAX):
    '''
    Minimize J(c1, c2) = sup |limit_error| over the half-line
    Input:
        alpha - in (0, 2)
        cache - optional prebuilt GridCache
        j_max - number of interpolation points to extract
    Coarse 41x41 grid on [0, 0.6] x [0, 5], then Nelder-Mead on the polished objective
    '''
    if not 0 < alpha < 2:
        raise DomainError(f"optimize_c needs 0 < alpha < 2, got {alpha}")
    cache = cache if cache is not None else build_cache(alpha)
    c1, c2, J0 = coarse_search(cache)
    logger.debug("alpha=%g coarse minimum J=%r at c1=%g c2=%g", alpha, J0, c1, c2)

    d1 = COARSE_C1[1] - COARSE_C1[0]
    d2 = COARSE_C2[1] - COARSE_C2[0]
    simplex = np.array([[c1, c2], [c1 + d1, c2], [c1, c2 + d2]])
    res = optimize.minimize(
        lambda p: objective(cache, p[0], p[1]),
        np.array([c1, c2]),
        method="Nelder-Mead",
        options={"xatol": SIMPLEX_XATOL, "fatol": SIMPLEX_FATOL, "maxiter": SIMPLEX_MAXITER,
                 "initial_simplex": simplex},
    )
    if not res.success:
        raise ConvergenceError(f"simplex search for alpha={alpha} failed: {res.message}",
                               partial=(float(res.x[0]), float(res.x[1]), float(res.fun)))
    c1, c2 = float(res.x[0]), float(res.x[1])
    logger.debug("alpha=%g optimum J=%r at c1=%r c2=%r after %d evaluations", alpha, res.fun, c1, c2, res.nfev)

    roots = interp_points(alpha, c1, c2, j_max, cache)
    points, spread = alternation_points(alpha, c1, c2, j_max, cache, roots)
    return NearBestSolution(
        alpha=alpha,
        c1=c1,
        c2=c2,
        minimax=float(res.fun),
        interp_points=tuple(roots),
        alternation_points=tuple(points),
        equioscillation_spread=spread,
        tail_bound=tail_bound(cache, c1, c2),
        delta_ref=DELTA_INF.get(alpha),
    )


@functools.lru_cache(maxsize=16)
def _systems(n):
    return chebinterp.build_nodes("P1", n), chebinterp.build_nodes("P2", n)


def p3_poly(alpha, n, c1, c2, x):
    '''
    The near-best polynomial P3 of degree 2n at x in [-1, 1]
    T_{2n+1}(x) / ((2n+1) x) takes its limit (-1)^n at x = 0
    '''
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if not 2 * n > alpha:
        raise DomainError(f"p3_poly needs 2n > alpha, got n={n}, alpha={alpha}")
    n = int(n)
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1):
        raise DomainError("p3_poly needs x in [-1, 1]")
    p1, p2 = _systems(n)
    xf = np.atleast_1d(xa).ravel()
    ratio = np.full_like(xf, (-1.0) ** n)
    nz = xf != 0
    ratio[nz] = specfun.chebyshev_T(2 * n + 1, xf[nz]) / ((2 * n + 1) * xf[nz])
    value = (c1 * chebinterp.interp_eval(p1, alpha, xf) + (1 - c1) * chebinterp.interp_eval(p2, alpha, xf)
             + _sinFactor(alpha) * c2 * (-1.0) ** n * (2.0 * n) ** -alpha * ratio)
    if xa.ndim == 0:
        return float(value[0])
    return value.reshape(xa.shape)


def p3_sup_error(alpha, n, c1, c2):
    """ (2n)^alpha max_{[0,1]} | |x|^alpha - P3(x) | """
    if not 2 * n > alpha:
        raise DomainError(f"p3_sup_error needs 2n > alpha, got n={n}, alpha={alpha}")
    absErr = lambda x: np.abs(np.abs(x) ** alpha - p3_poly(alpha, n, c1, c2, x))
    return chebinterp.scaled_sup(absErr, n, alpha)


def table_constants(alpha):
    """ published (c1, c2) for alpha, matched to two decimals """
    key = round(float(alpha), 2)
    if key not in C_TABLE:
        raise DomainError(f"no published (c1, c2) for alpha={alpha}")
    return C_TABLE[key]
