"""
laberrors.py
Exception types shared by the bernstein-lab modules
"""


class LabError(Exception):
    """ Base class for every failure raised by the lab """


class DomainError(LabError, ValueError):
    """ Argument outside the mathematical domain of an operation """


class QuadratureError(LabError, ArithmeticError):
    """ Integrand produced a non-finite value at a quadrature node """

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa


class ConvergenceError(LabError, RuntimeError):
    '''
    An iterative solver stopped without meeting its tolerance
    Input:
        message - description of the failure
        partial - best-so-far result (reference set, solution, achieved tolerance)
    '''

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InvariantError(LabError, AssertionError):
    """ A computed object violates one of its documented invariants """
