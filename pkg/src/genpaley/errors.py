"""Exception hierarchy shared by every module."""


class PaleyError(Exception):
    """Base class for all errors raised by genpaley."""


class DomainError(PaleyError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ValidationError(DomainError):
    """An integer is not a fundamental discriminant."""


class ParityError(DomainError):
    """The operation needs an even character (delta > 0)."""


class UnsupportedRangeError(PaleyError, ValueError):
    """Input is valid but beyond the brute-force cap of the operation."""


class ContractError(PaleyError, ValueError):
    """Arguments are individually valid but mutually inconsistent."""
