"""
entire.py
Limiting entire functions of exponential type 1 for |x|^alpha

    H_alpha(x) = |x|^alpha - (2/pi) sin(pi alpha/2) H(alpha, x)             integral form
               = sin x [ (2/pi) sum_{n<N} sin(pi(alpha-2n-2)/2) C(alpha-2n-2) x^(2n+1)
                         + 2 x^(2N+1) sum_{k>=1} (-1)^k (k pi)^(alpha-2N) / (x^2 - (k pi)^2) ]
                                                           series form, N = [alpha/2]
    G_alpha(x) = |x|^alpha - (2/pi) sin(pi alpha/2) cos x A0(alpha, x)

H_alpha interpolates |x|^alpha at k pi, G_alpha at (k+1/2) pi and 0.
Negative x is handled by even reflection.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

import kernels
from kernels import KernelKind
from laberrors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

ACCEL_MODES = ("pairing", "euler")
#half-width around k pi where the k-th term is evaluated jointly with sin x
POLE_WINDOW = 1e-4
EULER_START_ROUNDS = 24
EULER_MAX_ROUNDS = 1536


@dataclass(frozen=True)
class SeriesConfig:
    max_terms: int = 200000
    accel: str = "euler"
    target_tol: float = 1e-8

    def __post_init__(self):
        if self.max_terms < 100:
            raise DomainError(f"max_terms must be at least 100, got {self.max_terms}")
        if self.accel not in ACCEL_MODES:
            raise DomainError(f"accel must be one of {ACCEL_MODES}, got {self.accel!r}")
        if not self.target_tol > 0:
            raise DomainError(f"target_tol must be positive, got {self.target_tol}")


DEFAULT_SERIES = SeriesConfig()


def is_even_integer(alpha):
    return float(alpha).is_integer() and int(alpha) % 2 == 0


def beta_point(alpha):
    """ beta(alpha) = pi [alpha/pi] + 3 pi/2, an odd multiple of pi/2 right of alpha """
    if not alpha > 0:
        raise DomainError(f"beta_point needs alpha > 0, got {alpha}")
    return math.pi * math.floor(alpha / math.pi) + 1.5 * math.pi


def H_alpha_integral(alpha, x):
    """ |x|^alpha - (2/pi) sin(pi alpha/2) H(alpha, |x|) """
    if not alpha > 0:
        raise DomainError(f"H_alpha_integral needs alpha > 0, got {alpha}")
    xa = abs(x)
    return xa ** alpha - 2.0 / math.pi * math.sin(math.pi * alpha / 2) * kernels.kernel_eval(KernelKind.H, alpha, xa)


def G_alpha(alpha, x):
    """ |x|^alpha - (2/pi) sin(pi alpha/2) cos x A0(alpha, |x|) """
    if not alpha > 0 or is_even_integer(alpha):
        raise DomainError(f"G_alpha needs alpha > 0 and not an even integer, got {alpha}")
    xa = abs(x)
    return xa ** alpha - 2.0 / math.pi * math.sin(math.pi * alpha / 2) * math.cos(xa) * kernels.kernel_eval(KernelKind.A0, alpha, xa)


def _poleTerm(k, x):
    ''' sin(x) / (x^2 - (k pi)^2), finite at x = k pi '''
    d = x - k * math.pi
    if abs(d) < POLE_WINDOW:
        return (-1.0) ** k * np.sinc(d / math.pi) / (2 * k * math.pi + d)
    return math.sin(x) / (x * x - (k * math.pi) ** 2)


def _tailMagnitude(k, x, p):
    kp = k * math.pi
    return kp ** p / (x * x - kp * kp)


def _tailTerms(k, x, p):
    """ (-1)^k (k pi)^p / (x^2 - (k pi)^2) for an integer array k far from x/pi """
    return np.where(k % 2 == 0, 1.0, -1.0) * _tailMagnitude(k, x, p)


def _euler_tail(x, p, k0, rounds):
    '''
    Euler transform of sum_{k>=k0} (-1)^k b(k) by repeated averaging of partial sums
    Returns (value, error estimate)
    '''
    k = np.arange(k0, k0 + rounds + 1)
    s = np.cumsum(_tailTerms(k, x, p))
    while s.size > 2:
        s = 0.5 * (s[:-1] + s[1:])
    return 0.5 * (s[0] + s[1]), 0.5 * abs(s[1] - s[0])


def _pair_tail(x, p, k0, max_terms):
    """
    Adjacent-pair summation of sum_{k>=k0} (-1)^k b(k) up to k = K-1, closed by
    the Euler-Boole remainder
        sum_{k>=K} (-1)^k b(k) = (-1)^K [ b(K)/2 - b'(K)/4 + b'''(K)/48 - ... ]
    truncated after b'(K)/4; the error estimate is the b''' term
    """
    kmax = max(k0 + 2, max_terms)
    if (kmax - k0) % 2 == 0:
        kmax -= 1
    terms = _tailTerms(np.arange(k0, kmax + 1), x, p)
    pairs = terms[0::2] + terms[1::2]
    K = float(kmax + 1)
    b = lambda k: _tailMagnitude(k, x, p)
    d1 = (b(K + 1) - b(K - 1)) / 2
    d3 = (b(K + 2) - 2 * b(K + 1) + 2 * b(K - 1) - b(K - 2)) / 2
    sign = 1.0 if (kmax + 1) % 2 == 0 else -1.0
    remainder = sign * (b(K) / 2 - d1 / 4)
    err = abs(d3) / 48 + np.finfo(float).eps * float(np.abs(pairs).sum())
    return float(pairs.sum()) + remainder, err


def H_alpha_series(alpha, x, cfg=DEFAULT_SERIES):
    '''
    Interpolating series of H_alpha
    Input:
        alpha - positive, not an even integer
        x - real; removable poles at k pi are evaluated through their limit
        cfg - SeriesConfig (acceleration of the alternating tail)
    '''
    if not alpha > 0 or is_even_integer(alpha):
        raise DomainError(f"H_alpha_series needs alpha > 0 and not an even integer, got {alpha}")
    xa = abs(float(x))
    if xa == 0:
        return 0.0
    N = int(math.floor(alpha / 2))
    p = alpha - 2 * N

    poly = 0.0
    for n in range(N):
        a = alpha - 2 * n - 2
        poly += math.sin(math.pi * a / 2) * kernels.C_closed(a) * xa ** (2 * n + 1)
    poly *= 2.0 / math.pi

    #head: every k up to well past x/pi, each with the pole-safe sin x factor
    k0 = max(32, int(math.ceil(2 * xa / math.pi)) + 16)
    head = sum((-1.0) ** k * (k * math.pi) ** p * _poleTerm(k, xa) for k in range(1, k0))

    prefactor = 2.0 * xa ** (2 * N + 1)
    target = cfg.target_tol * max(1.0, xa ** alpha)
    if cfg.accel == "pairing":
        tail, err = _pair_tail(xa, p, k0, cfg.max_terms)
    else:
        rounds = EULER_START_ROUNDS
        tail, err = _euler_tail(xa, p, k0, rounds)
        while prefactor * err > target and 2 * rounds <= min(cfg.max_terms, EULER_MAX_ROUNDS):
            rounds *= 2
            tail, err = _euler_tail(xa, p, k0, rounds)
    achieved = prefactor * err
    if achieved > target:
        raise ConvergenceError(
            f"H_alpha_series({alpha}, {x}) reached only {achieved:.3g} (target {target:.3g})",
            partial=achieved,
        )
    return math.sin(xa) * poly + prefactor * (head + math.sin(xa) * tail)
