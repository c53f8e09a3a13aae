"""Exception hierarchy shared by all rpsneg modules."""


class RPSError(Exception):
    """Base class for every error raised by rpsneg."""


class DomainError(RPSError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class FrameMismatchError(DomainError):
    """Two objects that must share a frame do not."""


class ValidationError(RPSError, ValueError):
    """A mass function (or similar container) violates its invariants."""


class CountOverflowError(RPSError, OverflowError):
    """An exact combinatorial count exceeds the supported integer width."""


class CapacityError(RPSError):
    """Enumeration or matrix construction would exceed the configured cap."""


class NumericalError(RPSError, ArithmeticError):
    """A floating point result is inconsistent beyond tolerance."""
