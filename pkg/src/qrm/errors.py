"""Exception types raised by the library."""

from __future__ import annotations


class QrmError(Exception):
    """Base class for every domain error raised by :mod:`qrm`."""


class CapExceeded(QrmError):
    """Raised when an exhaustive enumeration would exceed its configured cap."""

    def __init__(self, what: str, needed: int, cap: int, cap_name: str = "enumeration cap") -> None:
        self.needed = needed
        self.cap = cap
        self.cap_name = cap_name
        super().__init__(f"{what} needs 2^{needed} items but the {cap_name} is 2^{cap}")


class EmptyCode(QrmError):
    """Minimum distance of the zero code is undefined."""


class NonIntegerResult(QrmError, ValueError):
    """MacWilliams transform produced a non-integral or negative coefficient."""


class InvalidOrder(QrmError, ValueError):
    """Reed-Muller order/length pair outside the allowed range."""


class MismatchedLength(QrmError, ValueError):
    pass


class InvalidPartition(QrmError, ValueError):
    pass


class NotSelfDualNested(QrmError, ValueError):
    """The dual of C1 is not contained in C1, so no CSS pair exists."""


class NotInCodespace(QrmError, ValueError):
    pass


class DomainError(QrmError, ValueError):
    """Probability or code parameter outside its mathematical domain."""
