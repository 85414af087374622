"""
asymptotics.py
Large-alpha behaviour of the kernels

    envelope bounds  C/(1+2a) (1 - 1/sqrt a) <= H1(a,a) <= ||H1|| <= C/(1+2a) (1 + 2/sqrt a)
    Watson expansions of G(a+k, a+c) = int f_{k,c}(t) exp(-a (t - log t)) dt,
        f_{k,c}(t) = t^k exp(-c t) / (1 + t^2), split at the minimum t = 1 of t - log t
    the root of a -> R(a,a) near 2.54, monotonicity of H1(a,.) beyond a,
    and the ratio ||H(a,.)|| (1+2a) / C(a)
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

import kernels
import specfun
from kernels import KernelKind
from laberrors import DomainError, InvariantError

logger = logging.getLogger(__name__)

BRANCHES = ("upper", "lower")
ALPHA0_BRACKET = (2.4, 3.0)
MONOTONE_GRID = 200
SQRT2 = math.sqrt(2.0)

#G(a,a) and G(a+1,a) over sqrt(2 pi/a) e^-a, by powers of 1/a
G_EXPANSIONS = {
    "G_aa": (1 / 2, -5 / 24, 61 / 576),
    "G_a1a": (1 / 2, -5 / 24, 205 / 576),
}


def _upper_table(k):
    return (
        1 / (2 * SQRT2),
        (3 * k - 1) / 6,
        (6 * k ** 2 - 6 * k - 5) / (12 * SQRT2),
        (45 * k ** 3 - 90 * k ** 2 - 90 * k + 86) / 270,
        (36 * k ** 4 - 120 * k ** 3 - 96 * k ** 2 + 324 * k + 61) / (432 * SQRT2),
        (189 * k ** 5 - 945 * k ** 4 - 315 * k ** 3 + 4683 * k ** 2 + 168 * k - 3730) / 11340,
    )


def _flip(a):
    # the lower branch reverses the sign of odd-index coefficients
    return tuple(((-1) ** n) * v for n, v in enumerate(a))


@dataclass(frozen=True)
class WatsonCoeffs:
    k: int
    branch: str
    a: tuple
    c: float = 0.0
    lam: int = 1
    mu: int = 2

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise DomainError(f"branch must be one of {BRANCHES}, got {self.branch!r}")
        if self.c == 0:
            upper = _upper_table(self.k)
            expected = upper if self.branch == "upper" else _flip(upper)
            if not np.allclose(self.a, expected[:len(self.a)], rtol=0, atol=1e-15):
                raise InvariantError(f"coefficients for k={self.k} break the branch symmetry")


@dataclass(frozen=True)
class EnvelopeBounds:
    alpha: float
    lower: float
    point_value: float
    norm: float
    upper: float

    def __post_init__(self):
        if not self.lower <= self.point_value <= self.norm <= self.upper:
            raise InvariantError(
                f"envelope chain broken at alpha={self.alpha}: "
                f"{self.lower} <= {self.point_value} <= {self.norm} <= {self.upper}"
            )


def watson_coeffs(k, branch):
    """ a_0..a_5 for f_{k,0} on the upper (1, inf) or lower (0, 1) branch """
    if k not in (0, 1):
        raise DomainError(f"watson_coeffs needs k in {{0, 1}}, got {k}")
    upper = _upper_table(k)
    return WatsonCoeffs(k, branch, upper if branch == "upper" else _flip(upper))


def watson_coeffs_shifted(c, branch):
    """ a_0, a_1 for f_{0,c}, c >= 0 """
    if not c >= 0:
        raise DomainError(f"watson_coeffs_shifted needs c >= 0, got {c}")
    a0 = math.exp(-c) / (2 * SQRT2)
    a1 = math.exp(-c) * (1 + 3 * c) / 6
    return WatsonCoeffs(0, branch, (a0, -a1 if branch == "upper" else a1), c)


def normalized_terms(coeffs):
    '''
    Coefficients of one branch expansion in units of sqrt(2 pi/a) e^-a:
    term n is Gamma((n+1)/2) a_n / sqrt(2 pi) times a^(-n/2)
    '''
    return [math.gamma((n + coeffs.lam) / coeffs.mu) * a / math.sqrt(2 * math.pi) for n, a in enumerate(coeffs.a)]


def branch_series(coeffs, alpha, terms=None):
    """ e^-a sum_n Gamma((n+1)/2) a_n a^(-(n+1)/2) over the first `terms` coefficients """
    a = coeffs.a if terms is None else coeffs.a[:terms]
    return math.exp(-alpha) * sum(
        math.gamma((n + coeffs.lam) / coeffs.mu) * an * alpha ** (-(n + coeffs.lam) / coeffs.mu)
        for n, an in enumerate(a)
    )


def watson_series(k, alpha, order=2):
    """ upper plus lower branch expansion of G(alpha+k, alpha) through a^-(2 order + 1)/2; odd terms cancel """
    if order not in (0, 1, 2):
        raise DomainError(f"watson_series has orders 0..2, got {order}")
    terms = 2 * order + 1
    return branch_series(watson_coeffs(k, "upper"), alpha, terms) + branch_series(watson_coeffs(k, "lower"), alpha, terms)


def G_asympt(alpha, variant, order, c=0.0):
    '''
    Truncated expansions
        G_aa:  G(a, a)     = sqrt(2 pi/a) e^-a (1/2 - 5/(24a) + 61/(576a^2))
        G_a1a: G(a+1, a)   = sqrt(2 pi/a) e^-a (1/2 - 5/(24a) + 205/(576a^2))
        G_aac: G(a, a+c)   = sqrt(2 pi/a) e^-a e^-c / 2           (order 0 only)
    '''
    if not alpha > 0:
        raise DomainError(f"G_asympt needs alpha > 0, got {alpha}")
    if variant == "G_aac":
        if order != 0 or not c >= 0:
            raise DomainError("G_aac is available at order 0 with c >= 0 only")
        coeffs = (math.exp(-c) / 2,)
    elif variant in G_EXPANSIONS:
        coeffs = G_EXPANSIONS[variant]
        if not 0 <= order < len(coeffs):
            raise DomainError(f"{variant} has orders 0..{len(coeffs) - 1}, got {order}")
    else:
        raise DomainError(f"unknown expansion {variant!r}")
    lead = math.sqrt(2 * math.pi / alpha) * math.exp(-alpha)
    return lead * sum(coeffs[j] * alpha ** (-j) for j in range(order + 1))


def envelope_bounds(alpha):
    """ the chain lower <= H1(a,a) <= ||H1(a,.)|| <= upper, checked on construction """
    if not alpha >= 2:
        raise DomainError(f"envelope_bounds needs alpha >= 2, got {alpha}")
    scale = kernels.C_const(alpha) / (1 + 2 * alpha)
    return EnvelopeBounds(
        alpha=alpha,
        lower=scale * (1 - 1 / math.sqrt(alpha)),
        point_value=kernels.kernel_eval(KernelKind.H1, alpha, alpha),
        norm=kernels.sup_norm_H1(alpha).norm,
        upper=scale * (1 + 2 / math.sqrt(alpha)),
    )


def R_diag(alpha):
    """ R(alpha, alpha) """
    return kernels.kernel_eval(KernelKind.R, alpha, alpha)


def find_alpha0(tol=1e-7, bracket=ALPHA0_BRACKET):
    '''
    Root of alpha -> R(alpha, alpha) by bisection
    Input:
        tol - accuracy of the returned root, >= 1e-7
        bracket - interval with a sign change of R(alpha, alpha)
    '''
    if not tol >= 1e-7:
        raise DomainError(f"find_alpha0 needs tol >= 1e-7, got {tol}")
    lo, hi = bracket
    if R_diag(lo) * R_diag(hi) >= 0:
        raise DomainError(f"R(alpha, alpha) has no sign change on [{lo}, {hi}]")
    root = optimize.bisect(R_diag, lo, hi, xtol=tol / 100)
    logger.debug("alpha0 = %r", root)
    return root


def monotonicity_check(alpha, x_hi, points=MONOTONE_GRID):
    """ True iff H1(alpha,.) strictly decreases along a grid of [alpha, x_hi] """
    if not x_hi > alpha:
        raise DomainError(f"monotonicity_check needs x_hi > alpha, got {x_hi} <= {alpha}")
    xs = np.linspace(alpha, x_hi, points)
    values = kernels.kernel_grid(KernelKind.H1, alpha, xs)
    return bool(np.all(np.diff(values) < 0))


def ratio_thm53(alpha):
    """ ||H(alpha,.)|| (1 + 2 alpha) / C(alpha) """
    if not alpha >= 2:
        raise DomainError(f"ratio_thm53 needs alpha >= 2, got {alpha}")
    return kernels.sup_norm_H(alpha).norm * (1 + 2 * alpha) / kernels.C_const(alpha)


def degree_shift_gap(alpha):
    """ G(alpha+1, alpha) - (1 + alpha^-3) G(alpha, alpha) """
    g1 = kernels.kernel_eval(KernelKind.G, alpha + 1, alpha)
    g0 = kernels.kernel_eval(KernelKind.G, alpha, alpha)
    return g1 - (1 + alpha ** -3) * g0


def shift_ratio(alpha):
    """ H1(alpha, alpha + 3 pi/2) / H1(alpha, alpha) """
    return kernels.kernel_eval(KernelKind.H1, alpha, alpha + 1.5 * math.pi) / kernels.kernel_eval(KernelKind.H1, alpha, alpha)


def zeta_bound_holds(alpha):
    """ 1 < Z(alpha) < 1 + 2^-alpha + 2^(1-alpha)/(alpha-1) """
    z = specfun.zeta(alpha)
    return 1 < z < specfun.zeta_upper_bound(alpha)
