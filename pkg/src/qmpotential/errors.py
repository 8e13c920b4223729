"""Exception hierarchy shared across the package."""


class QMError(Exception):
    """Base class for all errors raised by qmpotential."""


class ZeroConstantTerm(QMError, ZeroDivisionError):
    pass


class NotUnitOne(QMError, ValueError):
    pass


class NonzeroConstant(QMError, ValueError):
    pass


class NotReversible(QMError, ValueError):
    pass


class DimensionMismatch(QMError, ValueError):
    pass


class WindowExhausted(QMError):
    """Raised when an operator needs w-orders beyond the stored window."""


class OutOfWindow(QMError, IndexError):
    pass


class InvalidSpec(QMError, ValueError):
    """Geometry data violating positivity or the Calabi-Yau balance."""
