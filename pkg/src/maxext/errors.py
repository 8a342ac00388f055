"""Exception hierarchy shared by all maxext modules."""


class MaxextError(Exception):
    """Base class for all maxext errors."""


class DomainError(MaxextError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class NoRootError(DomainError):
    """The norming equation has no root on the admissible branch."""


class ConfigurationError(MaxextError, ValueError):
    """Mutually incompatible options (scheme/power mismatch, bad order, ...)."""


class DegenerateError(MaxextError, ValueError):
    """A norming scheme degenerated (nonpositive scale constant)."""


class DiagnosticsError(MaxextError, ValueError):
    """A diagnostic was requested on a grid too poor to support it."""
