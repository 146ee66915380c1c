class CaboxError(Exception):
    """Base class for all errors raised by cabox."""


class InvalidInputError(CaboxError, ValueError):
    """Malformed input: bad ids, invalid arcs or intervals, parse failures."""


class PreconditionError(CaboxError):
    """The input is well formed but violates an algorithm's precondition.

    Examples are a numbering that is not Bi-Consecutive, a non-normal model
    handed to the normal-model approximation, or a model with no two-point
    cover passed to the co-bipartite solver.
    """
