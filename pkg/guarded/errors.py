"""Exception hierarchy for the guarded toolkit."""


class GuardedError(Exception):
    """Base class for every error raised by this package."""


class GuardednessError(GuardedError):
    """Raised when guarded-fragment discipline is broken at runtime.

    Two situations trigger it: a fixpoint suspension demanded before
    ``lfix`` has tied its knot, and a traversal requested at an effect
    that supplies no ``predict``.
    """


class CapabilityError(GuardedError):
    """Raised when forcing is attempted without the evaluation capability."""


class BudgetError(GuardedError, ValueError):
    """Raised for negative depth or fuel budgets."""


class UnknownDemoError(GuardedError, KeyError):
    """Raised when a demo name is not registered."""


class ConfigError(GuardedError, ValueError):
    """Raised when environment configuration cannot be parsed."""
