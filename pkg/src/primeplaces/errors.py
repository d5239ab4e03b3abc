"""Exception hierarchy shared by every module."""


class PrimePlacesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PrimePlacesError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NotPrimeError(DomainError):
    pass


class NotSmoothError(DomainError):
    pass


class ClassMismatchError(DomainError):
    pass


class InvalidInputError(PrimePlacesError, ValueError):
    pass


class BoundExceededError(PrimePlacesError):
    """A size limit (sieve range, class budget, exhaustive limit) was exceeded."""


class ClassBudgetExceededError(BoundExceededError):
    pass


class ContradictionError(PrimePlacesError):
    """A search found an object that a cited theorem says cannot exist.

    Reaching this means either the theorem failed or the code is wrong.
    The offending report is attached so it is never lost.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
