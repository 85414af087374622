#!/usr/bin/env python
# coding: utf-8

'''
labTables.py
Builds the numerical tables and sampled curves, and writes them as CSV or JSON
Usage: $ python bernsteinLab.py table <name> -a=<alpha> [-n=<n list>] [-o=<out>]
       $ python bernsteinLab.py curve <kind> -a=<alpha> -x=<start:stop:step> [-o=<out>]
'''

import json
import logging
import math
import multiprocessing
import sys

import numpy as np
import pandas as pd

import asymptotics
import chebinterp
import entire
import kernels
import nearbest
import remez
from kernels import KernelKind
from laberrors import DomainError
from quadrature import DEFAULT_CONFIG

logger = logging.getLogger(__name__)

VERSION = "1.0.0"
TABLES = ("c_constants", "interp_points", "convergence", "envelope", "bernstein", "remez")
CURVES = ("H", "H1", "H_alpha", "G_alpha", "limit_error", "R_diag")
DEFAULT_N = {
    "convergence": (16, 32, 64, 128, 256),
    "bernstein": (8, 16, 32, 64),
    "remez": (1, 2, 4, 8, 16, 32, 64),
}
FLOAT_FORMAT = "%.17g"


def fanOut(worker, arguments, jobs):
    '''
    Map worker over tuple arguments, in order
    Input:
        worker - module-level function taking one tuple
        arguments - list of tuples
        jobs - worker processes; 1 runs inline
    '''
    jobs = min(jobs, len(arguments))
    if jobs <= 1:
        return [worker(args) for args in arguments]
    pool = multiprocessing.Pool(jobs)
    try:
        return pool.map(worker, arguments)
    finally:
        pool.close()
        pool.join()


#table workers, one alpha each

def cConstantsRow(args):
    alpha, = args
    sol = nearbest.optimize_c(alpha)
    c1p, c2p = nearbest.C_TABLE.get(round(alpha, 2), (math.nan, math.nan))
    return [(alpha, sol.c1, sol.c2, sol.minimax, c1p, c2p)]


def interpPointsRows(args):
    alpha, jmax = args
    sol = nearbest.optimize_c(alpha, j_max=jmax)
    published = nearbest.X_STAR_TABLE.get(round(alpha, 2), ())
    rows = []
    for j, x in enumerate(sol.interp_points, start=1):
        rows.append((alpha, j, x, published[j - 1] if j <= len(published) else math.nan))
    return rows


def convergenceRows(args):
    alpha, scheme, ns, c1, c2 = args
    if scheme == "P1":
        limit = kernels.limit_constant_G(alpha)
    elif scheme == "P2":
        limit = kernels.limit_constant_H(alpha)
    else:
        limit = nearbest.objective(nearbest.build_cache(alpha), c1, c2)
    rows = []
    for n in ns:
        if scheme == "P3":
            err = nearbest.p3_sup_error(alpha, n, c1, c2)
        else:
            err = chebinterp.sup_error(chebinterp.build_nodes(scheme, n), alpha)
        rows.append((alpha, scheme, n, limit, err.scaled_error))
    return rows


def envelopeRow(args):
    alpha, = args
    b = asymptotics.envelope_bounds(alpha)
    return [(alpha, b.lower, b.point_value, b.norm, b.upper)]


def bernsteinRow(args):
    alpha, ns = args
    return [(alpha, kernels.delta_1_closed(alpha), kernels.delta_2_closed(alpha), remez.bernstein_extrapolate(alpha, ns))]


def remezRows(args):
    alpha, ns = args
    return [(alpha, n, e, s) for n, e, s in remez.scaled_errors(alpha, ns)]


TABLE_COLUMNS = {
    "c_constants": ["alpha", "c1", "c2", "minimax", "c1_published", "c2_published"],
    "interp_points": ["alpha", "j", "x_star", "x_star_published"],
    "convergence": ["alpha", "scheme", "n", "limit", "scaled_error"],
    "envelope": ["alpha", "lower", "H1_aa", "norm", "upper"],
    "bernstein": ["alpha", "delta_1", "delta_2", "delta_inf_estimate"],
    "remez": ["alpha", "n", "E_2n", "scaled"],
}


def _c(cfg, alpha):
    if cfg.c1 is not None and cfg.c2 is not None:
        return cfg.c1, cfg.c2
    return nearbest.table_constants(alpha)


def build_table(cfg):
    '''
    Rows of one named table as a DataFrame, in the order of cfg.alpha
    Input:
        cfg - RunConfig with command "table"
    '''
    name = cfg.name
    ns = cfg.n or DEFAULT_N.get(name, ())
    if name == "c_constants":
        worker, arguments = cConstantsRow, [(a,) for a in cfg.alpha]
    elif name == "interp_points":
        worker, arguments = interpPointsRows, [(a, cfg.jmax) for a in cfg.alpha]
    elif name == "convergence":
        arguments = []
        for a in cfg.alpha:
            c1, c2 = _c(cfg, a) if cfg.scheme == "P3" else (None, None)
            arguments.append((a, cfg.scheme, ns, c1, c2))
        worker = convergenceRows
    elif name == "envelope":
        worker, arguments = envelopeRow, [(a,) for a in cfg.alpha]
    elif name == "bernstein":
        worker, arguments = bernsteinRow, [(a, ns) for a in cfg.alpha]
    elif name == "remez":
        worker, arguments = remezRows, [(a, ns) for a in cfg.alpha]
    else:
        raise DomainError(f"unknown table {name!r}")
    chunks = fanOut(worker, arguments, cfg.jobs)
    rows = [row for chunk in chunks for row in chunk]
    return pd.DataFrame(rows, columns=TABLE_COLUMNS[name])


def curveChunk(args):
    kind, alpha, xs, c1, c2 = args
    xs = np.asarray(xs, dtype=float)
    if kind == "H":
        return np.column_stack([xs, kernels.kernel_grid(KernelKind.H, alpha, xs), kernels.kernel_grid(KernelKind.H1, alpha, xs)])
    if kind == "H1":
        return np.column_stack([xs, kernels.kernel_grid(KernelKind.H1, alpha, xs)])
    if kind == "H_alpha":
        return np.column_stack([xs, [entire.H_alpha_integral(alpha, x) for x in xs], np.abs(xs) ** alpha])
    if kind == "G_alpha":
        return np.column_stack([xs, [entire.G_alpha(alpha, x) for x in xs], np.abs(xs) ** alpha])
    cache = nearbest.build_cache(alpha)
    return np.column_stack([xs, nearbest.limit_error(alpha, c1, c2, xs, cache)])


def rDiagChunk(args):
    alphas, = args
    return np.column_stack([alphas, [asymptotics.R_diag(a) for a in alphas]])


CURVE_COLUMNS = {
    "H": ["x", "value", "envelope"],
    "H1": ["x", "value"],
    "H_alpha": ["x", "value", "abs_x_alpha"],
    "G_alpha": ["x", "value", "abs_x_alpha"],
    "limit_error": ["x", "value"],
    "R_diag": ["alpha", "value"],
}


def build_curve(cfg):
    '''
    Sampled curve (x, value[, value2]) as a DataFrame
    R_diag samples alpha -> R(alpha, alpha) over cfg.alpha; every other kind
    samples x over cfg.x at the single alpha cfg.alpha[0]
    '''
    kind = cfg.name
    if kind == "R_diag":
        chunks = fanOut(rDiagChunk, [(list(c),) for c in np.array_split(cfg.alpha, max(cfg.jobs, 1)) if len(c)], cfg.jobs)
        return pd.DataFrame(np.vstack(chunks), columns=CURVE_COLUMNS[kind])
    if len(cfg.alpha) != 1:
        raise DomainError(f"curve {kind} takes a single alpha, got {len(cfg.alpha)}")
    if not cfg.x:
        raise DomainError(f"curve {kind} needs an x grid (-x start:stop:step)")
    alpha = cfg.alpha[0]
    c1, c2 = _c(cfg, alpha) if kind == "limit_error" else (None, None)
    xs = np.asarray(cfg.x, dtype=float)
    #limit_error shares one grid cache, so it is not split
    parts = 1 if kind == "limit_error" else max(cfg.jobs, 1)
    arguments = [(kind, alpha, list(c), c1, c2) for c in np.array_split(xs, parts) if len(c)]
    chunks = fanOut(curveChunk, arguments, cfg.jobs)
    return pd.DataFrame(np.vstack(chunks), columns=CURVE_COLUMNS[kind])


def metadata(cfg):
    """ key/value pairs recorded with every output file """
    return {
        "tool": f"bernstein-lab {VERSION}",
        "command": f"{cfg.command} {cfg.name}",
        "quad_rel_tol": DEFAULT_CONFIG.rel_tol,
        "quad_max_levels": DEFAULT_CONFIG.max_levels,
        "remez_rel_tol": remez.REL_TOL,
        "config": cfg.to_dict(),
    }


def write_csv(frame, meta, handle):
    for key, value in meta.items():
        handle.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
    frame.to_csv(handle, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_json(frame, meta, handle):
    payload = {"meta": meta, "columns": list(frame.columns), "rows": frame.to_dict(orient="records")}
    json.dump(payload, handle, sort_keys=True, indent=2)
    handle.write("\n")


def write_output(frame, cfg):
    ''' Write to cfg.out (stdout when unset) in cfg.fmt '''
    writer = write_json if cfg.fmt == "json" else write_csv
    meta = metadata(cfg)
    if cfg.out is None:
        writer(frame, meta, sys.stdout)
        return
    with open(cfg.out, "w", newline="") as handle:
        writer(frame, meta, handle)
