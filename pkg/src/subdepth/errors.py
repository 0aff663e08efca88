"""Exception hierarchy.

Input errors (bad files, bad group specs) derive from ``InputError``; the CLI
maps those to exit code 1.  ``InternalCheckFailure`` subclasses mean a
theorem-level identity failed to hold, which is always a bug; the CLI maps
those to exit code 2.
"""

from __future__ import annotations


class SubdepthError(Exception):
    pass


class InputError(SubdepthError):
    pass


class InternalCheckFailure(SubdepthError):
    pass


# intmatrix
class MalformedFile(InputError):
    pass


class ZeroRowOrColumn(InputError):
    pass


class TheoremViolation(InternalCheckFailure):
    pass


# bratteli
class OracleMismatch(InternalCheckFailure):
    pass


# perm
class BadCycleSyntax(InputError):
    pass


class RepeatedPoint(BadCycleSyntax):
    pass


class PointOutOfRange(BadCycleSyntax):
    pass


class CapExceeded(InputError):
    pass


class NotASubgroup(InputError):
    pass


class NotNormal(InputError):
    pass


# chartab
class UnsupportedSize(InputError):
    pass


class OrthogonalityFailure(InputError):
    # tables normally come from files; a generated table failing is a bug
    pass


class NonIntegerMultiplicity(InputError):
    pass


class RedundantResult(InputError):
    pass


class NotACharacter(InputError):
    pass


class TablesUnavailable(InputError):
    pass


# young
class WeightMismatch(InputError):
    pass
