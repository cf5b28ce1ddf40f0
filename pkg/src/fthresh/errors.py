"""Exception hierarchy shared by every module."""


class FthreshError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVector(FthreshError, ValueError):
    pass


class NoSolution(FthreshError, ValueError):
    pass


class NonUniqueSolution(FthreshError, ValueError):
    """Raised by :func:`fthresh.kernel.solve_linear` when the rank is deficient.

    ``particular`` carries one exact solution of the system.
    """

    def __init__(self, message, particular):
        super().__init__(message)
        self.particular = particular


class DimensionMismatch(FthreshError, ValueError):
    pass


class DegenerateCone(FthreshError, ValueError):
    pass


class NotInSemigroup(FthreshError, ValueError):
    pass


class UnsupportedJ(FthreshError, ValueError):
    pass


class SimplicialRequired(FthreshError, ValueError):
    pass


class NotGorenstein(FthreshError, ValueError):
    pass


class EnumerationBoundExceeded(FthreshError, RuntimeError):
    """The test-ideal search box hit its doubling cap.

    ``partial`` holds the (sound but possibly incomplete) generator list found
    in the last box.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class OracleBudgetExceeded(FthreshError, RuntimeError):
    pass
