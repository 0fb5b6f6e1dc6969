"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LatticeError(Exception):
    """Base class.

    ``report`` carries a ValidationReport when one is available; ``line`` and
    ``token`` locate the problem when it came from a parsed file.
    """

    def __init__(self, message: str, report=None, *, line: int | None = None,
                 token: str | None = None):
        if line is not None:
            where = f"line {line}"
            if token is not None:
                where += f", token {token!r}"
            message = f"{where}: {message}"
        super().__init__(message)
        self.report = report
        self.line = line
        self.token = token


class UnknownElement(LatticeError):
    pass


class DuplicateElement(LatticeError):
    pass


class NotAPartialOrder(LatticeError):
    pass


class NotBounded(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class SizeLimitExceeded(LatticeError):
    pass


class NotTotal(LatticeError):
    pass


class NotMonotone(LatticeError):
    pass


class NotARetraction(LatticeError):
    pass


class DomainMismatch(LatticeError):
    pass


class TheoremViolation(LatticeError):
    """All hypotheses held, yet the extended operator failed a check."""


class UnknownReference(LatticeError):
    pass


class DuplicateEntry(LatticeError):
    pass


class LatticeSyntaxError(LatticeError):
    """Malformed input file."""
