#!/usr/bin/env python
# coding: utf-8

'''
bernsteinLab.py
Command line entry for the |x|^alpha approximation lab: verification suites,
numerical tables and sampled curves
Usage: $ python bernsteinLab.py verify <identities|limits|asymptotics|all> [-t=<tol>]
       $ python bernsteinLab.py table <c_constants|interp_points|convergence|envelope|bernstein|remez> -a=<alpha> [options]
       $ python bernsteinLab.py curve <H|H1|H_alpha|G_alpha|limit_error|R_diag> -a=<alpha> [-x=<start:stop:step>] [options]
'''

import argparse
import dataclasses
import logging
import os
import sys
import time
from dataclasses import dataclass

import numpy as np
import psutil

import labChecks
import labTables
from laberrors import DomainError, LabError

NTASKS = int(os.environ.get('NTASKS', 1))
COMMANDS = {
    "verify": labChecks.SUITES + ("all",),
    "table": labTables.TABLES,
    "curve": labTables.CURVES,
}
FORMATS = ("csv", "json")
SCHEMES = ("P1", "P2", "P3")


def parseValues(text, cast=float):
    '''
    Parse "a", "a,b,c" or "start:stop:step" (stop included) into a tuple
    Grid values are rounded to 12 decimals so 0.1:1.9:0.1 gives 0.3, not 0.30000000000000004
    '''
    if text is None or text == "":
        return ()
    text = str(text)
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if not step > 0 or stop < start:
            raise DomainError(f"bad range {text!r}")
        count = int(round((stop - start) / step)) + 1
        values = np.round(start + step * np.arange(count), 12)
        return tuple(cast(v) for v in values)
    return tuple(cast(float(v)) if cast is float else cast(v) for v in text.split(","))


@dataclass(frozen=True)
class RunConfig:
    command: str
    name: str
    alpha: tuple = ()
    n: tuple = ()
    scheme: str = "P2"
    tol: float = None
    out: str = None
    fmt: str = "csv"
    jobs: int = 1
    jmax: int = 10
    x: tuple = ()
    c1: float = None
    c2: float = None
    verbose: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"command must be one of {tuple(COMMANDS)}, got {self.command!r}")
        if self.name not in COMMANDS[self.command]:
            raise DomainError(f"{self.command} takes one of {COMMANDS[self.command]}, got {self.name!r}")
        if self.fmt not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.scheme not in SCHEMES:
            raise DomainError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.jobs < 1 or self.jmax < 1:
            raise DomainError("jobs and jmax must be positive")
        if self.tol is not None and self.tol < 0:
            raise DomainError(f"tol must be nonnegative, got {self.tol}")
        if (self.c1 is None) != (self.c2 is None):
            raise DomainError("--c1 and --c2 go together")
        if self.command != "verify" and not self.alpha:
            raise DomainError(f"{self.command} needs --alpha")
        if any(not a > 0 for a in self.alpha) or any(n < 1 for n in self.n):
            raise DomainError("alpha values must be positive and n values at least 1")

    @classmethod
    def from_dict(cls, values):
        """ Build from a plain dict; unknown keys are rejected """
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise DomainError(f"unknown configuration keys: {unknown}")
        values = dict(values)
        for key in ("alpha", "n", "x"):
            if key in values:
                values[key] = tuple(values[key])
        return cls(**values)

    def to_dict(self):
        values = dataclasses.asdict(self)
        for key in ("alpha", "n", "x"):
            values[key] = list(values[key])
        return values


def buildParser():
    parser = argparse.ArgumentParser(description="Approximation of |x|^alpha: verification, tables and curves")
    parser.add_argument("command", choices=list(COMMANDS), help="verify, table or curve")
    parser.add_argument("name", help="suite, table or curve name")
    parser.add_argument("-a", "--alpha", help="alpha value, list a,b,c or range start:stop:step")
    parser.add_argument("-n", "--n", help="list of n values, e.g. 8,16,32")
    parser.add_argument("-sc", "--scheme", choices=SCHEMES, default="P2", help="node system for the convergence table")
    parser.add_argument("-t", "--tol", type=float, help="override of every closeness tolerance in verify")
    parser.add_argument("-o", "--out", help="output file (stdout when omitted)")
    parser.add_argument("-f", "--format", choices=FORMATS, default="csv", dest="fmt", help="output format")
    parser.add_argument("-j", "--jobs", type=int, default=NTASKS, help="worker processes (default $NTASKS or 1)")
    parser.add_argument("-jm", "--jmax", type=int, default=10, help="number of interpolation points")
    parser.add_argument("-x", "--x", help="x grid start:stop:step for curves")
    parser.add_argument("--c1", type=float, help="weight of the P1 interpolant (default: published table)")
    parser.add_argument("--c2", type=float, help="weight of the Chebyshev correction (default: published table)")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parser


def configFromArgs(args):
    return RunConfig(
        command=args.command,
        name=args.name,
        alpha=parseValues(args.alpha),
        n=parseValues(args.n, int),
        scheme=args.scheme,
        tol=args.tol,
        out=args.out,
        fmt=args.fmt,
        jobs=args.jobs,
        jmax=args.jmax,
        x=parseValues(args.x),
        c1=args.c1,
        c2=args.c2,
        verbose=args.verbose,
    )


def runVerify(cfg):
    print("--VERIFY--")
    checks = labChecks.run_suite(cfg.name, cfg.tol)
    for check in checks:
        print(check.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def runTable(cfg):
    print("--TABLE--", file=sys.stderr)
    labTables.write_output(labTables.build_table(cfg), cfg)
    return 0


def runCurve(cfg):
    print("--CURVE--", file=sys.stderr)
    labTables.write_output(labTables.build_curve(cfg), cfg)
    return 0


RUNNERS = {"verify": runVerify, "table": runTable, "curve": runCurve}


def reportResources(start):
    e = int(time.time() - start)
    sys.stderr.write('\n Time elapsed: {:02d}:{:02d}:{:02d}\n'.format(e // 3600, (e % 3600 // 60), e % 60))
    process = psutil.Process(os.getpid())
    sys.stderr.write(' Total memory in bytes: {}\n'.format(process.memory_info().rss))


def main(argv=None):
    parser = buildParser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")

    start = time.time()
    try:
        cfg = configFromArgs(args)
    except (DomainError, ValueError) as e:
        sys.stderr.write(f"\nERROR: Bad configuration: {e}\n")
        return 2
    try:
        code = RUNNERS[cfg.command](cfg)
    except (DomainError, ValueError) as e:
        sys.stderr.write(f"\nERROR: Failed {cfg.command} {cfg.name} ({e}). Please check the parameters.\n")
        return 2
    except (LabError, ArithmeticError, RuntimeError) as e:
        sys.stderr.write(f"\nERROR: Failed {cfg.command} {cfg.name} ({e}). Please try again.\n")
        return 1
    reportResources(start)
    return code


if __name__ == "__main__":
    sys.exit(main())
