"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Shapes of the operands do not conform."""


class ConfigError(ValueError):
    """A configuration value is out of its legal range or inconsistent."""


class InvariantViolation(ValueError):
    """A structural invariant (ordering, positivity, range) does not hold."""


class FeasibilityError(RuntimeError):
    """No admissible solution exists under the given constraints."""


class PartialTrackError(FeasibilityError):
    """Sequential tracking ran out of room; carries the layers found so far."""

    def __init__(self, message, layers):
        super().__init__(message)
        self.layers = layers


class UndefinedLossError(ValueError):
    """The loss is undefined for this sample (e.g. zero internal layers)."""


class MissingGradientError(RuntimeError):
    """An optimizer step was requested for a parameter without a gradient."""
