"""
searching.py
Golden-section maximization and grid bracketing used by the sup-norm engines
"""

import math
import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def goldenMaxSteps(width, xtol):
    """ Number of golden-section reductions needed to shrink width below xtol """
    if width <= xtol:
        return 0
    return int(math.ceil(math.log(xtol / width) / math.log(INV_PHI)))


def golden_max(f, a, b, xtol=1e-8):
    '''
    Golden-section search for the maximum of a unimodal scalar function
    Input:
        f - scalar function
        a, b - bracket
        xtol - final bracket width
    Returns (x, f(x)) at the best point seen
    '''
    a, b = min(a, b), max(a, b)
    h = b - a
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(goldenMaxSteps(h, xtol)):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)
    if yc > yd:
        return c, yc
    return d, yd


def golden_max_many(f, a, b, xtol=1e-10):
    '''
    Vectorized golden-section maximization over many independent brackets
    Input:
        f - vectorized function, maps an array of abscissae to an array of values
        a, b - arrays of bracket ends
        xtol - final bracket width (the widest bracket sets the step count)
    Returns arrays (x, f(x))
    '''
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    if a.size == 0:
        return a, a.copy()
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    h = hi - lo
    c = lo + INV_PHI_SQUARE * h
    d = lo + INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(goldenMaxSteps(float(h.max()), xtol)):
        left = yc > yd
        #left: maximum in [lo, d]
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
        h = INV_PHI * h
        newC = lo + INV_PHI_SQUARE * h
        newD = lo + INV_PHI * h
        nextC = np.where(left, newC, d)
        nextD = np.where(left, c, newD)
        nextYc = np.where(left, 0.0, yd)
        nextYd = np.where(left, yc, 0.0)
        trial = np.where(left, nextC, nextD)
        fp = f(trial)
        yc = np.where(left, fp, nextYc)
        yd = np.where(left, nextYd, fp)
        c, d = nextC, nextD
    take = yc > yd
    return np.where(take, c, d), np.where(take, yc, yd)


def local_max_indices(values):
    """ Indices i of interior grid points with values[i-1] <= values[i] >= values[i+1] """
    v = np.asarray(values)
    if v.size < 3:
        return np.array([], dtype=int)
    inner = (v[1:-1] >= v[:-2]) & (v[1:-1] >= v[2:])
    return np.nonzero(inner)[0] + 1


def sign_change_brackets(xs, ys):
    """ Consecutive grid pairs (x_i, x_{i+1}) over which ys changes sign (zeros count as the right end) """
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    s = np.sign(ys)
    idx = np.nonzero(s[:-1] * s[1:] < 0)[0]
    exact = np.nonzero(s[1:] == 0)[0]
    idx = np.union1d(idx, exact)
    return [(xs[i], xs[i + 1]) for i in idx]
