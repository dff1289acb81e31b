"""Exception types shared across the package."""


class GadgetbenchError(Exception):
    """Base class for all package-specific errors."""


class DegenerateInput(GadgetbenchError, ValueError):
    """Geometric input collapses (all points collinear, empty hull, ...)."""


class PreconditionViolated(GadgetbenchError, ValueError):
    """An operation's documented precondition does not hold."""


class InvalidFattening(GadgetbenchError, ValueError):
    """Fattening width is not positive or is too large to preserve answers."""


class ProvenanceRequired(GadgetbenchError, ValueError):
    """Operation only applies to instances produced by a known reduction."""


class BudgetExceeded(GadgetbenchError, RuntimeError):
    """A search or grid exceeded its configured evaluation budget."""


class ChainInvalid(GadgetbenchError, ValueError):
    """Reduction chain names do not form a valid path in the reduction DAG."""


class BoundsExceeded(GadgetbenchError, ValueError):
    """Requested instance size falls outside the generator's bounds."""
