"""Exception types raised across the package."""


class NotOddPrime(ValueError):
    pass


class FieldOverflow(OverflowError):
    """Field size outside the supported bound (p < 2**31, q <= 10**6)."""


class DivisionByZero(ZeroDivisionError):
    pass


class InvalidK(ValueError):
    """Matrix dimension k is not admissible for the requested construction."""


class NotADivisor(InvalidK):
    pass


class KMustBeOdd(InvalidK):
    pass


class QTooSmall(ValueError):
    pass


class BadResidueClass(ValueError):
    pass


class NonIntegralResult(ArithmeticError):
    """A formula that must produce an integer did not; indicates a bug."""


class BoundExceeded(ValueError):
    pass


class ConditionFailed(ValueError):
    """The hypothesis of a claimed identity does not hold for these inputs."""


class NotApplicable(ValueError):
    """A verification case does not apply to the given (q, k)."""
