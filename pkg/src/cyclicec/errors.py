"""Exception hierarchy.

Every error raised for a violated precondition derives from ``DomainError``;
the CLI maps those to exit code 3.  ``ResourceError`` subclasses (size gates,
exhausted sampling budgets) map to exit code 4.
"""


class CECError(Exception):
    """Base class for all package errors."""


class DomainError(CECError):
    pass


class ResourceError(CECError):
    pass


class InvalidVertex(DomainError):
    pass


class LoopRejected(DomainError):
    pass


class InvalidPair(DomainError):
    pass


class InvalidParameter(DomainError):
    pass


class UnknownEdge(DomainError):
    pass


class RegularityRequired(DomainError):
    pass


class ConnectivityRequired(DomainError):
    pass


class AcyclicInput(DomainError):
    pass


class EvenGirthRequired(DomainError):
    pass


class OddGirthRequired(DomainError):
    pass


class TheoremPreconditionViolated(DomainError):
    pass


class MinDegreeTooSmall(DomainError):
    pass


class GirthTooSmall(DomainError):
    pass


class ExcludedK3t(DomainError):
    pass


class TwoEdgeConnectivityRequired(DomainError):
    pass


class ConstructionInvariantViolated(CECError):
    """A generator produced a graph that fails its own self-check (a bug)."""


class LemmaViolationSuspected(CECError):
    """No separating girth cycle found although the preconditions hold (a bug)."""


class TooLarge(ResourceError):
    pass


class GenerationFailed(ResourceError):
    pass
