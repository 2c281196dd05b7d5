"""Exception types shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError and its
subclasses -> 3, NumericalError -> 4.
"""


class ConfigError(Exception):
    """Invalid configuration value or an unsatisfiable configuration."""


class DataError(Exception):
    """Base class for malformed or inconsistent input data."""


class ParseError(DataError):
    """A file could not be parsed; message carries location and reason."""


class TruncatedDataError(DataError):
    """Binary input shorter than its declared length."""

    def __init__(self, expected: int, got: int, what: str = "data"):
        super().__init__(f"truncated {what}: expected {expected} bytes, got {got}")
        self.expected = expected
        self.got = got


class SampleRangeError(DataError):
    """A sample value outside the representable amplitude range."""

    def __init__(self, index: int, value: int):
        super().__init__(f"sample {value} at index {index} outside [-2048, 2047]")
        self.index = index
        self.value = value


class AlignmentError(DataError):
    """Annotations and signal do not line up on minute boundaries."""


class GroupingError(DataError):
    """Record name does not belong to any known record group."""


class EmptyClassError(DataError):
    """A dataset class ended up with no rows at all."""


class FormatError(DataError):
    """A serialized container fails its format checks (magic, version, sizes)."""


class ShapeError(DataError):
    """Array arguments with incompatible shapes."""


class EmptyInputError(DataError):
    """An operation that needs at least one element received none."""


class IngestError(DataError):
    """One or more records could not be read from disk."""

    def __init__(self, failures: list[tuple[str, str]]):
        lines = ", ".join(f"{record}: {reason}" for record, reason in failures)
        super().__init__(f"failed to ingest {len(failures)} record(s): {lines}")
        self.failures = failures


class NumericalError(Exception):
    """A non-finite value appeared during training or inference."""


class UndefinedMetricError(Exception):
    """A metric whose denominator is zero; reported as absent, never as 0."""
