"""Exception hierarchy shared by every module."""

from __future__ import annotations


class VetoError(Exception):
    """Base class for domain errors (CLI maps these to exit code 65)."""


class TiedPoints(VetoError):
    """Two marked points coincide where distinct points are required."""


class ArityMismatch(VetoError):
    """Mark count of an interval does not fit the requested semantics."""


class UnsupportedFamily(VetoError):
    pass


class BadParameters(VetoError):
    pass


class TooManyEdges(VetoError):
    pass


class TooLarge(VetoError):
    pass


class NotUnit(VetoError):
    pass


class NotProper(VetoError):
    pass


class NotMidpointUnit(VetoError):
    pass


class NotUnitIntervals(VetoError):
    pass


class ParseError(VetoError):
    """Malformed representation or graph file."""
