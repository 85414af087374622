"""
specfun.py
Scalar special functions: Gamma, Riemann zeta Z(alpha), odd-integer zeta sums,
Dirichlet beta sums and Chebyshev polynomials T_n
"""

import math

import numpy as np
from scipy import special

from laberrors import DomainError

#above this exponent the Dirichlet beta sum is summed directly
DIRECT_BETA_EXPONENT = 40.0
DIRECT_BETA_TERMS = 12


def gamma(x):
    """ Gamma function for x > 0; raises OverflowError past the double range """
    if not x > 0:
        raise DomainError(f"gamma needs x > 0, got {x}")
    value = float(special.gamma(x))
    if not math.isfinite(value):
        raise OverflowError(f"gamma({x}) exceeds the double precision range")
    return value


def zeta(alpha):
    """ Riemann zeta Z(alpha) = sum n^-alpha """
    if not alpha > 1:
        raise DomainError(f"zeta needs alpha > 1, got {alpha}")
    return float(special.zeta(alpha, 1.0))


def odd_zeta(alpha):
    '''
    2 * sum_{n>=0} (1+2n)^-alpha, equal to Z(alpha)(2 - 2^(1-alpha))
    Input:
        alpha - exponent > 1
    '''
    if not alpha > 1:
        raise DomainError(f"odd_zeta needs alpha > 1, got {alpha}")
    #sum (n+1/2)^-alpha = 2^alpha * sum (2n+1)^-alpha
    return float(2.0 * 2.0 ** (-alpha) * special.zeta(alpha, 0.5))


def dirichlet_beta(s):
    '''
    Dirichlet beta sum_{n>=0} (-1)^n (1+2n)^-s for s > 1
    Uses beta(s) = 4^-s (zeta(s,1/4) - zeta(s,3/4)); large s is summed directly
    since 4^s overflows the Hurwitz values long before the sum leaves 1
    '''
    if not s > 1:
        raise DomainError(f"dirichlet_beta needs s > 1, got {s}")
    if s > DIRECT_BETA_EXPONENT:
        n = np.arange(DIRECT_BETA_TERMS)
        return float(np.sum((-1.0) ** n * (1.0 + 2.0 * n) ** (-s)))
    return float(4.0 ** (-s) * (special.zeta(s, 0.25) - special.zeta(s, 0.75)))


def alternating_odd_sum(alpha):
    """ sum_{n>=0} (-1)^n / (1+2n)^(alpha+2), the series in Nikolskii's formula """
    if not alpha > -1:
        raise DomainError(f"alternating_odd_sum needs alpha > -1, got {alpha}")
    return dirichlet_beta(alpha + 2.0)


def zeta_upper_bound(alpha):
    """ 1 + 2^-alpha + 2^(1-alpha)/(alpha-1), an upper bound of Z(alpha) """
    if not alpha > 1:
        raise DomainError(f"zeta_upper_bound needs alpha > 1, got {alpha}")
    return 1.0 + 2.0 ** (-alpha) + 2.0 ** (1.0 - alpha) / (alpha - 1.0)


def chebyshev_T(n, x):
    '''
    Chebyshev polynomial of the first kind, T_n(x) = cos(n arccos x)
    Input:
        n - nonnegative integer degree
        x - scalar or array in [-1, 1]
    '''
    if int(n) != n or n < 0:
        raise DomainError(f"chebyshev_T needs a nonnegative integer degree, got {n}")
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0):
        raise DomainError("chebyshev_T needs |x| <= 1")
    value = np.cos(int(n) * np.arccos(xa))
    if np.ndim(value) == 0:
        return float(value)
    return value
