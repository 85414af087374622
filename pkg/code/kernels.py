"""
kernels.py
The kernel-integral family built around the approximation of |x|^alpha

    C(a)    = int_0^inf t^a / sinh t dt
    D(a)    = int_0^inf t^(a-1) / cosh t dt
    H(a,x)  = int_0^inf t^a / sinh t * x sin x / (x^2 + t^2) dt
    H1(a,x) = int_0^inf t^a / sinh t * x / (x^2 + t^2) dt
    H2(a,x) = int_0^inf t^a / sinh t * x^2 / (x^2 + t^2) dt
    F(a,x)  = int_0^inf t^a / sinh(x t) / (1 + t^2) dt
    G(a,x)  = int_0^inf t^a exp(-x t) / (1 + t^2) dt
    R(a,x)  = (x/a) F(a+1,x) - F(a,x)
    S(a,x)  = (a x^(a-1) / 2) (x^2 + a^2) R(a,x)
    F1(a,x) = (2 - 2^-a) Z(a+1) G(a,x)
    F2(a,x) = (2 - 2^(2-a)) Z(a-1) G(a,x)          a > 2
    A0(a,x) = int_0^inf t^(a-1) / cosh t * x^2 / (x^2 + t^2) dt

plus the closed-form Nikolskii / Raitsin constants and the sup-norm searches
for H and H1 over the half-line.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

import specfun
from laberrors import DomainError, InvariantError
from quadrature import DEFAULT_CONFIG, integrate_zero_to_inf
from searching import golden_max

logger = logging.getLogger(__name__)

#H1 and the H sup-norm search resolve argmax positions to this width
ARGMAX_XTOL = 1e-7
H1_GRID_POINTS = 400
#a quadrature that stopped early is still trusted below this fraction of h*sum|w f|
ROUNDOFF_TRUST = 1e-9


class KernelKind(str, Enum):
    H = "H"
    H1 = "H1"
    H2 = "H2"
    F = "F"
    G = "G"
    R = "R"
    S = "S"
    F1 = "F1"
    F2 = "F2"
    A0 = "A0"


#kinds that have a finite value at x = 0
ZERO_SAFE = (KernelKind.H, KernelKind.H1, KernelKind.H2, KernelKind.A0)


@dataclass(frozen=True)
class SupNormReport:
    norm: float
    argmax: float
    truncation_X: float
    tail_bound: float
    local_maxima: tuple

    def __post_init__(self):
        if not self.tail_bound < self.norm:
            raise InvariantError(f"tail bound {self.tail_bound} does not certify norm {self.norm}")
        if self.local_maxima and max(v for _, v in self.local_maxima) != self.norm:
            raise InvariantError("norm is not the largest recorded local maximum")


def powOverSinh(alpha, t, scale=1.0):
    """ t^alpha / sinh(scale*t) without overflow for large t or alpha """
    st = scale * t
    return np.exp(alpha * np.log(t) - st) * 2.0 / -np.expm1(-2.0 * st)


def powOverCosh(power, t):
    return np.exp(power * np.log(t) - t) * 2.0 / (1.0 + np.exp(-2.0 * t))


def _integrate(f, cfg, breakpoints=()):
    result = integrate_zero_to_inf(f, cfg, breakpoints)
    if not result.converged and result.err_estimate > ROUNDOFF_TRUST * result.l1_norm:
        logger.warning("kernel quadrature not converged: value=%r err=%g levels=%d",
                       result.value, result.err_estimate, result.levels_used)
    return result.value


def _check_alpha(alpha, lower=0.0):
    if not alpha > lower:
        raise DomainError(f"alpha must exceed {lower}, got {alpha}")


def C_const(alpha, cfg=DEFAULT_CONFIG):
    """ C(alpha) = int_0^inf t^alpha / sinh t dt """
    _check_alpha(alpha)
    return _integrate(lambda t: powOverSinh(alpha, t), cfg)


def D_const(alpha, cfg=DEFAULT_CONFIG):
    """ int_0^inf t^(alpha-1) / cosh t dt """
    _check_alpha(alpha)
    return _integrate(lambda t: powOverCosh(alpha - 1.0, t), cfg)


def C_closed(alpha):
    """ 2 (1 - 2^-(alpha+1)) Gamma(alpha+1) Z(alpha+1) """
    _check_alpha(alpha)
    return 2.0 * (1.0 - 2.0 ** (-(alpha + 1.0))) * specfun.gamma(alpha + 1.0) * specfun.zeta(alpha + 1.0)


def D_closed(alpha):
    """ 2 Gamma(alpha) beta(alpha) through the Dirichlet beta; alpha > 1 """
    _check_alpha(alpha, 1.0)
    return 2.0 * specfun.gamma(alpha) * specfun.dirichlet_beta(alpha)


def _peakBreaks(x):
    # x/(x^2+t^2) peaks at t = x
    return (x,) if 0 < x < 1 else ()


def _H1(alpha, x, cfg):
    return _integrate(lambda t: powOverSinh(alpha, t) * x / (x * x + t * t), cfg, _peakBreaks(x))


def _H2(alpha, x, cfg):
    return _integrate(lambda t: powOverSinh(alpha, t) * x * x / (x * x + t * t), cfg, _peakBreaks(x))


def _F(alpha, x, cfg):
    return _integrate(lambda t: powOverSinh(alpha, t, x) / (1.0 + t * t), cfg)


def _G(alpha, x, cfg):
    return _integrate(lambda t: np.exp(alpha * np.log(t) - x * t) / (1.0 + t * t), cfg)


def _R(alpha, x, cfg):
    # one integral for (x/a) F(a+1,x) - F(a,x); the integrand changes sign at t = a/x
    sign_change = alpha / x
    return _integrate(
        lambda t: powOverSinh(alpha, t, x) * (x * t / alpha - 1.0) / (1.0 + t * t),
        cfg,
        (sign_change,),
    )


def _A0(alpha, x, cfg):
    return _integrate(lambda t: powOverCosh(alpha - 1.0, t) * x * x / (x * x + t * t), cfg, _peakBreaks(x))


def _at_zero(kind, alpha):
    # limits as x -> 0+
    if kind == KernelKind.H1:
        if alpha < 1:
            raise DomainError(f"H1(alpha, 0) diverges for alpha={alpha} < 1")
        return math.pi / 2 if alpha == 1 else 0.0
    return 0.0


def kernel_eval(kind, alpha, x, cfg=DEFAULT_CONFIG):
    '''
    Evaluate one member of the kernel family
    Input:
        kind - KernelKind (or its string name)
        alpha - exponent; > 2 for F2, > 0 otherwise
        x - evaluation point, x > 0 (x = 0 allowed for H, H1, H2, A0)
        cfg - QuadConfig
    '''
    kind = KernelKind(kind)
    _check_alpha(alpha, 2.0 if kind == KernelKind.F2 else 0.0)
    if x < 0 or (x == 0 and kind not in ZERO_SAFE):
        raise DomainError(f"{kind.value} needs x > 0, got {x}")
    if x == 0:
        return _at_zero(kind, alpha)

    if kind == KernelKind.H:
        return math.sin(x) * _H1(alpha, x, cfg)
    if kind == KernelKind.H1:
        return _H1(alpha, x, cfg)
    if kind == KernelKind.H2:
        return _H2(alpha, x, cfg)
    if kind == KernelKind.F:
        return _F(alpha, x, cfg)
    if kind == KernelKind.G:
        return _G(alpha, x, cfg)
    if kind == KernelKind.R:
        return _R(alpha, x, cfg)
    if kind == KernelKind.S:
        return alpha * x ** (alpha - 1.0) / 2.0 * (x * x + alpha * alpha) * _R(alpha, x, cfg)
    if kind == KernelKind.F1:
        return (2.0 - 2.0 ** (-alpha)) * specfun.zeta(alpha + 1.0) * _G(alpha, x, cfg)
    if kind == KernelKind.F2:
        return (2.0 - 2.0 ** (2.0 - alpha)) * specfun.zeta(alpha - 1.0) * _G(alpha, x, cfg)
    return _A0(alpha, x, cfg)


def kernel_grid(kind, alpha, xs, cfg=DEFAULT_CONFIG):
    """ kernel_eval over an array of points """
    return np.array([kernel_eval(kind, alpha, float(x), cfg) for x in np.ravel(xs)])


def sup_norm_H(alpha, cfg=DEFAULT_CONFIG):
    '''
    sup over x >= 0 of |H(alpha, x)|
    One golden-section search per period [k pi, (k+1) pi]; H vanishes at the
    period ends. The half-line is truncated at X once C(alpha)/X < norm/2,
    which bounds |H| beyond X since |H(alpha,x)| <= H2(alpha,x)/x <= C(alpha)/x.
    Periods whose bound C(alpha)/(k pi) is already below the best lobe are skipped.
    '''
    from entire import beta_point

    _check_alpha(alpha)
    c = C_const(alpha, cfg)
    X = max(alpha, beta_point(alpha)) + 10 * math.pi
    absH = lambda x: abs(kernel_eval(KernelKind.H, alpha, x, cfg))

    best = (0.0, 0.0)
    maxima = []
    k = 0
    while True:
        while (k + 1) * math.pi <= X:
            if k > 0 and c / (k * math.pi) <= best[1]:
                k += 1
                continue
            lo = max(k * math.pi, 1e-12)
            xk, vk = golden_max(absH, lo, (k + 1) * math.pi, ARGMAX_XTOL)
            maxima.append((xk, vk))
            if vk > best[1]:
                best = (xk, vk)
            k += 1
        if c / X < 0.5 * best[1]:
            break
        X *= 2
    logger.debug("sup_norm_H alpha=%g: norm=%r at %r, X=%g, %d lobes", alpha, best[1], best[0], X, len(maxima))
    return SupNormReport(best[1], best[0], X, c / X, tuple(maxima))


def sup_norm_H1(alpha, cfg=DEFAULT_CONFIG):
    '''
    sup over x >= 0 of H1(alpha, x), alpha > 1
    Grid scan of [0, alpha + 20 pi] with golden-section polish of the best cell;
    the range doubles until the tail bound H1 <= C(alpha)/x drops below norm/2.
    Each window contributes its polished maximum to local_maxima.
    '''
    if not alpha > 1:
        raise DomainError(f"sup_norm_H1 needs alpha > 1, got {alpha}")
    c = C_const(alpha, cfg)
    h1 = lambda x: kernel_eval(KernelKind.H1, alpha, x, cfg)

    lo, X = 0.0, alpha + 20 * math.pi
    best = (0.0, 0.0)
    maxima = []
    while True:
        xs = np.linspace(lo, X, H1_GRID_POINTS + 1)
        values = np.array([h1(x) for x in xs])
        i = int(np.argmax(values))
        left = xs[max(i - 1, 0)]
        right = xs[min(i + 1, len(xs) - 1)]
        xb, vb = golden_max(h1, left, right, ARGMAX_XTOL)
        if vb < values[i]:
            xb, vb = xs[i], values[i]
        maxima.append((float(xb), float(vb)))
        if vb > best[1]:
            best = maxima[-1]
        if c / X < 0.5 * best[1]:
            break
        lo, X = X, 2 * X
    logger.debug("sup_norm_H1 alpha=%g: norm=%r at %r, %d windows", alpha, best[1], best[0], len(maxima))
    return SupNormReport(best[1], best[0], X, c / X, tuple(maxima))


def _sinFactor(alpha):
    return 2.0 / math.pi * abs(math.sin(math.pi * alpha / 2.0))


def delta_1_closed(alpha):
    """ Nikolskii's L1 constant |sin(a pi/2)|/pi * 8 Gamma(a+1) sum (-1)^n/(1+2n)^(a+2) """
    if not alpha > -1:
        raise DomainError(f"delta_1_closed needs alpha > -1, got {alpha}")
    return abs(math.sin(alpha * math.pi / 2)) / math.pi * 8.0 * specfun.gamma(alpha + 1.0) * specfun.alternating_odd_sum(alpha)


def delta_2_closed(alpha):
    """ Raitsin's L2 constant |sin(a pi/2)|/pi * 2 Gamma(a+1) sqrt(pi/(2a+1)) """
    if not alpha > -0.5:
        raise DomainError(f"delta_2_closed needs alpha > -1/2, got {alpha}")
    return abs(math.sin(alpha * math.pi / 2)) / math.pi * 2.0 * specfun.gamma(alpha + 1.0) * math.sqrt(math.pi / (2 * alpha + 1))


def limit_constant_G(alpha, cfg=DEFAULT_CONFIG):
    """ limit of (2n)^alpha times the sup error of the P1 interpolant """
    return _sinFactor(alpha) * D_const(alpha, cfg)


def limit_constant_H(alpha, cfg=DEFAULT_CONFIG):
    """ limit of (2n)^alpha times the sup error of the P2 interpolant """
    return _sinFactor(alpha) * sup_norm_H(alpha, cfg).norm


def upper_estimate(alpha, cfg=DEFAULT_CONFIG):
    return _sinFactor(alpha) * C_const(alpha, cfg)
