"""Shared exception types."""


class ConfigError(ValueError):
    """Invalid, incomplete, or unknown configuration."""


class MissingInputError(FileNotFoundError):
    """A required input artifact (dataset, checkpoint) does not exist."""


class TrainingError(RuntimeError):
    """Training aborted, e.g. on a non-finite gradient."""
