"""Exception hierarchy for the zerofilter package.

Numerical failures (breakdown, resolution, root finding) and
configuration/serialization failures share a common base so callers can
catch everything from this package with one clause.
"""


class ZeroFilterError(Exception):
    """Base class for all package errors."""


class BreakdownDetected(ZeroFilterError):
    """Wave breaking: the slope limit was exceeded or samples went non-finite."""


class InvalidOrder(ZeroFilterError):
    """Derivative order outside the supported set {1, 2, 3}."""


class KernelUndefined(ZeroFilterError):
    """Green-kernel convolution requested at alpha = 0 where no kernel exists."""


class ResolutionExceeded(ZeroFilterError):
    """A construction or trajectory needs frequencies the grid cannot carry."""


class PeriodizationError(ZeroFilterError):
    """The periodic cell is too small: boundary decay check failed."""


class PastBreakingTime(ZeroFilterError):
    """Characteristics requested at or beyond the first crossing time."""


class NoConvergence(ZeroFilterError):
    """Root finding for the characteristic map failed to converge."""


class ConfigError(ZeroFilterError):
    """Base class for configuration-related failures."""


class MissingFile(ConfigError):
    """Config file path does not exist."""


class ParseError(ConfigError):
    """Config file is not well-formed TOML (carries line/column when known)."""


class ValidationError(ConfigError):
    """Config violates a documented invariant; message names the invariant."""


class IoError(ZeroFilterError):
    """Result emission failed; message carries the offending path."""
