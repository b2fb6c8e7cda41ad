# This file contains the exception hierarchy shared by every grasscluster module.
#
# Each class carries the CLI exit code it maps to:
#   1  a verification failed (identity false, degenerate values, disagreement)
#   2  the request itself is invalid (parameters, indices, inputs)
#   3  a resource cap would be exceeded


class GrassclusterError(Exception):
    """Base class for all errors raised by grasscluster."""

    exit_code = 1

    def to_payload(self) -> dict:
        return {"error": str(self), "type": type(self).__name__}


# ---------------------------------------------------------------------
# Usage errors (exit code 2)
# ---------------------------------------------------------------------

class UsageError(GrassclusterError):
    exit_code = 2


class ParameterError(UsageError, ValueError):
    """Parameters outside their admissible range, e.g. a >= n."""


class DimensionError(UsageError, ValueError):
    """Matrix shapes do not fit the requested operation."""


class PluckerIndexError(UsageError, IndexError):
    """Plücker index set has the wrong size, repeats, or leaves 1..n."""


class VertexNotFoundError(UsageError, KeyError):
    """A vertex id that does not belong to the quiver."""

    def __str__(self):
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class MutationAtFrozenError(UsageError):
    pass


class InvariantViolationError(UsageError):
    """A plane partition outside P(a,b,c)."""


class NotInConeError(UsageError):
    """A GZ vector violating the tropical potential inequalities."""


class MoveNotApplicableError(UsageError):
    pass


class ReducednessError(UsageError):
    pass


class InputFormatError(UsageError):
    """Malformed JSON or text input."""


# ---------------------------------------------------------------------
# Verification errors (exit code 1)
# ---------------------------------------------------------------------

class DegenerateSeedError(GrassclusterError):
    """A mutation produced zero (non-generic seed values)."""


class NonGenericError(GrassclusterError):
    """A configuration with a vanishing minor where a nonzero one is required."""


class InternalConsistencyError(GrassclusterError):
    """Two independent computations of the same quantity disagree."""


class VerificationFailed(GrassclusterError):
    pass


# ---------------------------------------------------------------------
# Resource errors (exit code 3)
# ---------------------------------------------------------------------

class ResourceCapError(GrassclusterError):
    exit_code = 3

    def __init__(self, message: str, estimated_cost: int = None):
        super().__init__(message)
        self.estimated_cost = estimated_cost

    def to_payload(self) -> dict:
        payload = super().to_payload()
        if self.estimated_cost is not None:
            payload["estimated_cost"] = self.estimated_cost
        return payload
