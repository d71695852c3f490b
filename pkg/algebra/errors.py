# algebra/errors.py
"""
Algebra Error Types

Exception hierarchy raised by the computational kernels of the Koszul Toolkit.
The CLI maps these onto its exit-code contract (parse failures vs. violated
preconditions).

Features:
- Single AlgebraError root so callers can catch every kernel failure
- Parse-side errors (InputParseError, SchemaVersionError)
- Precondition-side errors (inhomogeneous input, wrong degree profile, ...)

Project: Koszul Toolkit
License: MIT
"""


class AlgebraError(Exception):
    """Root of all errors raised by the algebra kernels."""


class QuiverError(AlgebraError, ValueError):
    """Malformed quiver: duplicate ids, empty vertex set, undeclared endpoints."""


class CompositionMismatchError(AlgebraError, ValueError):
    """Two paths were composed whose target and source do not match."""


class ZeroElementError(AlgebraError, ValueError):
    """An operation that needs a nonzero element (tip, monic) received zero."""


class PreconditionError(AlgebraError, ValueError):
    """An operation's documented precondition does not hold."""


class NonUniformError(PreconditionError):
    """An element or generator set is not uniform where uniformity is required."""


class InhomogeneousInputError(PreconditionError):
    """A generating relation is not length-homogeneous."""


class IncompleteGroebnerError(PreconditionError):
    """The Groebner basis is not valid up to the degree the caller asked for."""


class TruncatedRowError(PreconditionError):
    """A Betti row needed for a decision is truncated by the degree bound."""


class MixedDegreeError(PreconditionError):
    """A relation set expected to be concentrated in one degree is not."""


class WrongDegreeProfileError(PreconditionError):
    """Relation degrees fall outside the profile a check supports."""


class InputParseError(AlgebraError):
    """An input file or serialized payload could not be parsed."""


class SchemaVersionError(InputParseError):
    """A serialized payload carries an unsupported schema_version."""
