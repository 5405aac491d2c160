"""Exception types shared across the package."""


class MzvStarError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MzvStarError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class CapacityError(MzvStarError):
    """A request exceeds a configured combinatorial or series capacity."""


class AccuracyError(MzvStarError):
    """The requested tolerance cannot be certified with the given configuration."""
