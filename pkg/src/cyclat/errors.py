"""Error types shared by all cyclat modules.

Class names double as the error names surfaced on the command line, so they
deliberately do not carry an ``Error`` suffix.
"""


class CyclatError(Exception):
    """Base class for all library errors."""


class EmptySet(CyclatError):
    """An operation was given an empty set of orders."""


class DuplicateElement(CyclatError):
    """An input set contained a repeated element."""


class ResultantZero(CyclatError):
    """R(f,g) = 0: the pair shares a factor and the lattice is not full rank."""


class DegreeBound(CyclatError):
    """A polynomial exceeded the degree bound of the ambient lattice."""


class KeyMismatch(CyclatError):
    """A congruence-target map is not keyed exactly by the input set."""


class PreconditionViolated(CyclatError):
    """A documented precondition of an operation does not hold."""


class ResourceLimit(CyclatError):
    """A configured resource bound (lcm, candidate count) was exceeded."""


class InternalError(CyclatError):
    """A proved invariant failed at runtime; indicates an implementation bug."""
