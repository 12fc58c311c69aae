"""Exception types shared across the toolkit.

The CLI maps these onto process exit codes: config problems -> 2,
numeric domain problems -> 3, simulator configuration inconsistency -> 4.
"""


class ParameterError(ValueError):
    """A parameter set violates its documented invariants."""


class DomainError(ValueError):
    """A numeric argument left the validated evaluation domain."""


class ConfigError(ValueError):
    """A run configuration is unusable; the message names the offending key."""

    def __init__(self, key: str, message: str):
        super().__init__(f"config key '{key}': {message}")
        self.key = key


class SimulationInconsistencyError(RuntimeError):
    """The relay configuration cannot physically deliver a bit (e.g. a full
    pulse burst still cannot reach the charge threshold)."""
