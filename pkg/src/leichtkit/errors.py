"""Exception hierarchy shared by all modules.

Exit codes used by the command line: configuration problems map to 1,
unreadable or malformed data to 2, and failures inside a computation to 3.
"""


class LeichtkitError(Exception):
    """Base class for all library errors."""

    exit_code = 3


class ConfigError(LeichtkitError):
    """Invalid parameter, flag, or configuration value."""

    exit_code = 1


class DataError(LeichtkitError):
    """Malformed input data or model file."""

    exit_code = 2


class ModelFormatError(DataError):
    """Model file has a bad magic header, version, or corrupted payload."""


class ComputationError(LeichtkitError):
    """A computation could not be carried out on the given inputs."""


class TrainingError(ComputationError):
    """Language-model training received unusable input."""


class EvaluationError(ComputationError):
    """Perplexity or metric evaluation received unusable input."""


class FitError(ComputationError):
    """Regression fitting failed (too few samples or singular system)."""


class FeatureError(ComputationError):
    """Feature extraction received unusable text."""


class CompatibilityError(ComputationError):
    """Model and feature-extractor configuration do not match."""
