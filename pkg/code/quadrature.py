"""
quadrature.py
Double-exponential quadrature for the kernel integrals
    tanh-sinh on finite segments (a, b)
    exp-sinh on half-lines (a, inf)
    integrate_zero_to_inf composes both with a cut at split_point

Integrands are called with a numpy array of abscissae and must return an array
of the same shape. Endpoint singularities of algebraic type (t^(alpha-1) at 0)
need no special handling: abscissae are generated as distances from the
nearest endpoint, so they reach down to ~1e-300 without cancellation.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from laberrors import DomainError, QuadratureError

logger = logging.getLogger(__name__)

PI_OVER_2 = math.pi / 2
#|t| beyond this sends every abscissa onto an endpoint or to overflow
T_MAX = 6.5
H_START = 0.5
MIN_LEVELS = 3
#relative size of summation roundoff in a level sum
ROUNDOFF = 64 * np.finfo(float).eps
TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class QuadConfig:
    rel_tol: float = 1e-12
    abs_floor: float = 1e-300
    max_levels: int = 12
    split_point: float = 1.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.abs_floor >= 0:
            raise DomainError(f"abs_floor must be nonnegative, got {self.abs_floor}")
        if self.max_levels < 1:
            raise DomainError(f"max_levels must be at least 1, got {self.max_levels}")
        if not self.split_point > 0:
            raise DomainError(f"split_point must be positive, got {self.split_point}")


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    levels_used: int
    converged: bool
    #h * sum |w f| of the final level; scale of the summation roundoff
    l1_norm: float = 0.0


DEFAULT_CONFIG = QuadConfig()


def _evaluate(f, x):
    with np.errstate(all="ignore"):
        fx = np.array(f(x), dtype=float)
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape).astype(float)
    bad = ~np.isfinite(fx)
    if bad.any():
        where = float(x[np.argmax(bad)])
        raise QuadratureError(f"integrand is {fx[np.argmax(bad)]} at t={where!r}", abscissa=where)
    #flush subnormals
    fx[np.abs(fx) < TINY] = 0.0
    return fx


def _finite_nodes(a, b, t):
    u = PI_OVER_2 * np.sinh(t)
    #fractions of (b-a) measured from a and from b
    sa = expit(2 * u)
    sb = expit(-2 * u)
    with np.errstate(over="ignore", under="ignore"):
        w = (b - a) * math.pi * np.cosh(t) * sa * sb
    x = np.where(sa <= 0.5, a + (b - a) * sa, b - (b - a) * sb)
    keep = (w > 0) & (x > a) & (x < b)
    return x[keep], w[keep]


def _tail_cutoff(f, a):
    '''
    Largest level-0 abscissa t kept on the half-line (a, inf)
    Nodes are visited outward from t = 0 and the right tail is cut once |w f|
    falls below ROUNDOFF times the running sum of |w f| at two consecutive nodes,
    before x = a + exp(pi/2 sinh t) reaches magnitudes where x^p or exp(-x)
    turn into inf/inf or inf*0
    '''
    t, _ = _level_abscissae(0)
    x, w = _half_line_nodes(a, t[t <= 0])
    l1 = float(np.abs(w * _evaluate(f, x)).sum()) if x.size else 0.0
    small = 0
    for tk in t[t > 0]:
        xk, wk = _half_line_nodes(a, np.array([tk]))
        if xk.size == 0:
            return float(tk)
        term = abs(float(wk[0] * _evaluate(f, xk)[0]))
        l1 += term
        small = small + 1 if l1 > 0 and term <= ROUNDOFF * l1 else 0
        if small == 2:
            return float(tk)
    return T_MAX


def _half_line_nodes(a, t, t_hi=T_MAX):
    t = t[t <= t_hi]
    u = PI_OVER_2 * np.sinh(t)
    with np.errstate(over="ignore", under="ignore"):
        e = np.exp(u)
        w = PI_OVER_2 * np.cosh(t) * e
    x = a + e
    keep = np.isfinite(w) & (w > 0) & (x > a) & np.isfinite(x)
    return x[keep], w[keep]


def _level_abscissae(level):
    ''' t-values added at a refinement level: all of k*h at level 0, odd multiples after '''
    h = H_START / 2 ** level
    k = int(math.floor(T_MAX / h))
    if level == 0:
        return np.arange(-k, k + 1) * h, h
    odd = np.arange(-k + (k + 1) % 2, k + 1, 2)
    return odd * h, h


def _refine(f, nodes, cfg):
    '''
    Trapezoidal refinement in the transformed variable
    Input:
        f - vectorized integrand
        nodes - callable t -> (x, w) for the chosen transformation
        cfg - QuadConfig
    '''
    total = 0.0
    l1 = 0.0
    previous = None
    err = math.inf
    for level in range(cfg.max_levels + 1):
        t, h = _level_abscissae(level)
        x, w = nodes(t)
        fx = _evaluate(f, x) if x.size else np.zeros(0)
        wf = w * fx
        if level == 0:
            total = h * wf.sum()
            l1 = h * np.abs(wf).sum()
        else:
            total = 0.5 * total + h * wf.sum()
            l1 = 0.5 * l1 + h * np.abs(wf).sum()
        if previous is not None:
            err = abs(total - previous)
            target = max(cfg.rel_tol * abs(total), cfg.abs_floor)
            if level >= MIN_LEVELS and err <= target:
                return QuadResult(total, err, level, True, l1)
            if level >= MIN_LEVELS and err <= ROUNDOFF * l1:
                #cancellation: no further level can do better
                logger.debug("quadrature stopped at roundoff floor, err=%g l1=%g", err, l1)
                return QuadResult(total, err, level, False, l1)
        previous = total
    return QuadResult(total, err, cfg.max_levels, False, l1)


def integrate_finite(f, a, b, cfg=DEFAULT_CONFIG):
    """ tanh-sinh integral of f over (a, b) """
    if not a < b:
        raise DomainError(f"integrate_finite needs a < b, got ({a}, {b})")
    return _refine(f, lambda t: _finite_nodes(a, b, t), cfg)


def integrate_semi_infinite(f, a, cfg=DEFAULT_CONFIG):
    """ exp-sinh integral of f over (a, inf); f must decay at least exponentially """
    if not np.isfinite(a):
        raise DomainError(f"integrate_semi_infinite needs a finite left end, got {a}")
    t_hi = _tail_cutoff(f, a)
    return _refine(f, lambda t: _half_line_nodes(a, t, t_hi), cfg)


def combine(results):
    """ Sum of segment results """
    results = list(results)
    return QuadResult(
        value=float(sum(r.value for r in results)),
        err_estimate=float(sum(r.err_estimate for r in results)),
        levels_used=max(r.levels_used for r in results),
        converged=all(r.converged for r in results),
        l1_norm=float(sum(r.l1_norm for r in results)),
    )


def integrate_zero_to_inf(f, cfg=DEFAULT_CONFIG, breakpoints=()):
    '''
    Integral of f over (0, inf)
    Input:
        f - vectorized integrand
        cfg - QuadConfig; (0, split_point) by tanh-sinh, the rest by exp-sinh
        breakpoints - extra positive cut points (e.g. the peak of a kernel)
    '''
    cuts = sorted({float(p) for p in breakpoints if p > 0} | {cfg.split_point})
    edges = [0.0] + cuts
    parts = [integrate_finite(f, lo, hi, cfg) for lo, hi in zip(edges[:-1], edges[1:])]
    parts.append(integrate_semi_infinite(f, edges[-1], cfg))
    return combine(parts)
