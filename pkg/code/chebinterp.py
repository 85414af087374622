"""
chebinterp.py
Chebyshev node systems and barycentric interpolation of |x|^alpha

    P2: the 2n+1 zeros of T_{2n+1} (0 among them)
    P1: the 2n zeros of T_{2n} plus the extra node 0

Both interpolants are even polynomials of degree 2n. sup_error measures
(2n)^alpha * max_{[0,1]} | |x|^alpha - P(x) |, the quantity whose limits are
(2/pi)|sin(pi alpha/2)| ||H(alpha,.)|| (P2) and (2/pi)|sin(pi alpha/2)| D(alpha) (P1).
"""

import math
from dataclasses import dataclass

import numpy as np

from laberrors import DomainError
from searching import golden_max_many, local_max_indices

SCHEMES = ("P1", "P2")
GRID_PER_N = 40
POLISH_XTOL = 1e-13
#rows of evaluation points per barycentric block
EVAL_BLOCK = 4096


@dataclass(frozen=True, eq=False)
class NodeSystem:
    scheme: str
    n: int
    nodes: np.ndarray
    bary_weights: np.ndarray


@dataclass(frozen=True)
class InterpError:
    n: int
    scaled_error: float
    argmax_x: float


def product_weights(nodes):
    '''
    Barycentric weights 1 / prod_{k != j} (x_j - x_k), scaled so the largest is 1
    Products are accumulated as log-magnitudes and a sign count to stay in range
    '''
    diff = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(diff, 1.0)
    logw = -np.log(np.abs(diff)).sum(axis=1)
    negatives = (diff < 0).sum(axis=1)
    sign = np.where(negatives % 2 == 0, 1.0, -1.0)
    return sign * np.exp(logw - logw.max())


def build_nodes(scheme, n):
    '''
    Build a P1 or P2 node system in decreasing order
    Input:
        scheme - "P1" or "P2"
        n - polynomial order is 2n
    '''
    if scheme not in SCHEMES:
        raise DomainError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    n = int(n)
    if scheme == "P2":
        count = 2 * n + 1
        j = np.arange(1, count + 1)
        theta = (j - 0.5) * math.pi / count
        nodes = np.cos(theta)
        nodes[n] = 0.0
        #closed form for Chebyshev zeros
        weights = np.where(j % 2 == 0, 1.0, -1.0) * np.sin(theta)
        return NodeSystem(scheme, n, nodes, weights)
    j = np.arange(1, 2 * n + 1)
    zeros = np.cos((j - 0.5) * math.pi / (2 * n))
    nodes = np.concatenate([zeros[:n], [0.0], zeros[n:]])
    return NodeSystem(scheme, n, nodes, product_weights(nodes))


def _barycentric(system, values, x):
    out = np.empty_like(x)
    for start in range(0, x.size, EVAL_BLOCK):
        xb = x[start:start + EVAL_BLOCK]
        diff = xb[:, None] - system.nodes[None, :]
        hit = diff == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            c = system.bary_weights / diff
            p = (c @ values) / c.sum(axis=1)
        rows, cols = np.nonzero(hit)
        p[rows] = values[cols]
        out[start:start + EVAL_BLOCK] = p
    return out


def interp_eval(system, alpha, x):
    """ Interpolant of |t|^alpha on the system's nodes, evaluated at x in [-1, 1] """
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0):
        raise DomainError("interp_eval needs x in [-1, 1]")
    values = np.abs(system.nodes) ** alpha
    p = _barycentric(system, values, np.atleast_1d(xa).ravel()).reshape(xa.shape)
    if p.ndim == 0:
        return float(p)
    return p


def interp_error(system, alpha, x):
    """ |x|^alpha - P(x) """
    return np.abs(np.asarray(x, dtype=float)) ** alpha - interp_eval(system, alpha, x)


def scaled_interp_eval(system, alpha, x_big):
    """ (2n)^alpha P(x_big / (2n)) for |x_big| <= 2n """
    scale = 2 * system.n
    if np.any(np.abs(np.asarray(x_big)) > scale):
        raise DomainError(f"scaled_interp_eval needs |x_big| <= {scale}")
    return scale ** alpha * interp_eval(system, alpha, np.asarray(x_big, dtype=float) / scale)


def scaled_sup(abs_err, n, alpha):
    '''
    (2n)^alpha times the sup over [0,1] of a nonnegative error function
    A Chebyshev-distributed grid of GRID_PER_N*n points locates every extremum;
    each interior grid maximum is polished by golden-section search.
    Input:
        abs_err - vectorized |error| on [0, 1]
        n - polynomial order is 2n
        alpha - exponent of the scaling
    '''
    theta = np.linspace(0.0, math.pi / 2, GRID_PER_N * n + 1)
    xs = np.sort(np.cos(theta))
    xs[0], xs[-1] = 0.0, 1.0
    values = abs_err(xs)

    idx = local_max_indices(values)
    candidates_x = [xs[0], xs[-1]]
    candidates_v = [values[0], values[-1]]
    if idx.size:
        px, pv = golden_max_many(abs_err, xs[idx - 1], xs[idx + 1], POLISH_XTOL)
        #keep the grid value where polishing did not improve it
        better = pv >= values[idx]
        candidates_x.extend(np.where(better, px, xs[idx]))
        candidates_v.extend(np.where(better, pv, values[idx]))
    best = int(np.argmax(candidates_v))
    scaled = (2 * n) ** alpha * float(candidates_v[best])
    return InterpError(n, scaled, float(candidates_x[best]))


def sup_error(system, alpha):
    """ (2n)^alpha max_{[0,1]} | |x|^alpha - P(x) | for the system's interpolant """
    if not 2 * system.n > alpha:
        raise DomainError(f"sup_error needs 2n > alpha, got n={system.n}, alpha={alpha}")
    return scaled_sup(lambda x: np.abs(interp_error(system, alpha, x)), system.n, alpha)
