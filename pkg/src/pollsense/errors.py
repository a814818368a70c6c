"""Exception hierarchy for the pipeline."""


class PollsenseError(Exception):
    """Base class for all package errors."""


class ParseError(PollsenseError):
    """A malformed input file; carries path and 1-based line number."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class ValidationError(PollsenseError):
    """Well-formed input that violates a domain invariant."""


class ContractViolation(PollsenseError):
    """A pluggable component broke its contract (e.g. tagger length)."""


class DegenerateFitError(PollsenseError):
    """Calibration impossible: the sentiment series carries no signal."""


class DegenerateInferenceError(PollsenseError):
    """All raw inferences non-positive; no valid triplet exists."""


class ConfigError(PollsenseError):
    """Invalid or incomplete pipeline configuration."""
