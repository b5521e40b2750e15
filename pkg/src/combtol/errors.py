"""Semantic exception hierarchy.

Public functions never raise bare ``ValueError``/``RuntimeError``; every failure
mode maps to one of the classes below so callers (and the CLI exit-code logic)
can dispatch on meaning rather than message text.
"""


class CombtolError(Exception):
    """Base class for all errors raised by this package."""


class InstanceError(CombtolError, ValueError):
    """Structural problem with an instance: bad costs, duplicate or empty
    solutions, objective-specific invariant violations."""


class UnknownElementError(InstanceError):
    """An element id was referenced that the instance does not declare."""


class PerturbationError(CombtolError, ValueError):
    """A perturbation vector violates its contract (negative delta, or a
    product-objective decrease reaching the element's cost)."""


class DomainError(CombtolError, ValueError):
    """The queried quantity is undefined for the given arguments (empty
    subset, subset outside the current definition's domain, ...)."""


class UnsupportedObjectiveError(CombtolError, TypeError):
    """Operation is only defined for a different objective kind."""


class UndefinedOperationError(CombtolError, ArithmeticError):
    """Arithmetic on extended values that has no defined result (inf - inf)."""


class ResourceLimitError(CombtolError, RuntimeError):
    """A search exceeded its configured size or certification budget."""


class ParseError(CombtolError, ValueError):
    """An instance file or report could not be parsed."""
