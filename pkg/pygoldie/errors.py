"""
Exceptions raised by pygoldie. The CLI maps each class onto an exit code.
"""


class GoldieError(Exception):
    pass


class SizeError(GoldieError, ValueError):
    """
    Mismatched rank N between arguments, or input above an enumeration guard.
    """

    pass


class DomainError(GoldieError, ValueError):
    """
    A documented precondition does not hold (incomparable cosets, non-integral
    entries, shape mismatch, non-minimal permutation in strict mode, ...).
    """

    pass


class ConsistencyError(GoldieError, AssertionError):
    """
    An internal identity failed, e.g. a Goldie rank that is not a positive integer.
    """

    pass


class NumericFailure(GoldieError, ArithmeticError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


class TableauEmissionError(DomainError):
    pass
