"""Exception types shared across the package."""


class PivotLabError(Exception):
    """Base class for package errors."""


class InvalidInputError(PivotLabError, ValueError):
    """An argument violates an operation's contract (bad dimension, range, tag...)."""


class DegenerateDistributionError(PivotLabError, ValueError):
    """An estimator met a distribution it cannot handle (e.g. zero variance)."""


class ConfigError(PivotLabError, ValueError):
    """An experiment configuration is invalid; raised before any work starts."""
