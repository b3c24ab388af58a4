"""Typed errors shared across the package.

Every operational failure raises a subclass of :class:`OracleloomError` so the
CLI and HTTP layers can map failures to exit codes / status codes uniformly.
"""

from __future__ import annotations


class OracleloomError(Exception):
    """Base class for all package errors."""

    code = "error"


class ValidationError(OracleloomError):
    """Invalid input that was rejected before any work happened."""

    code = "invalid"


class NoKeyword(ValidationError):
    code = "no_keyword"


class BadDate(ValidationError):
    code = "bad_date"


class AllZero(ValidationError):
    code = "all_zero"


class EmptyLexicon(ValidationError):
    code = "empty_lexicon"


class BadThresholds(ValidationError):
    code = "bad_thresholds"


class DayMismatch(ValidationError):
    code = "day_mismatch"


class TooShort(ValidationError):
    code = "too_short"


class SingularDesign(OracleloomError):
    code = "singular_design"


class LengthMismatch(ValidationError):
    code = "length_mismatch"


class NonContiguous(ValidationError):
    code = "non_contiguous"


class InvalidRecord(ValidationError):
    code = "invalid_record"


class StorageFailure(OracleloomError):
    code = "storage_failure"


class FixtureMissing(OracleloomError):
    code = "fixture_missing"


class LiveDisabled(OracleloomError):
    """Live fetching requested but the adapter has no credentials."""

    code = "live_disabled"


class UpstreamError(OracleloomError):
    """A remote endpoint failed after retries were exhausted."""

    code = "upstream_error"

    def __init__(self, message: str, attempts: int = 1, last_status: int | None = None):
        super().__init__(message)
        self.attempts = attempts
        self.last_status = last_status


class NotFound(OracleloomError):
    code = "not_found"


class NoData(OracleloomError):
    """The requested window produced zero documents and zero records."""

    code = "no_data"


class ProviderUnknown(ValidationError):
    code = "provider_unknown"


class Timeout(OracleloomError):
    code = "timeout"


class BudgetExceeded(OracleloomError):
    code = "budget_exceeded"


class EmptyClause(ValidationError):
    code = "empty_clause"


class MissingSection(OracleloomError):
    code = "missing_section"

    def __init__(self, missing: list[str]):
        super().__init__(f"missing sections: {', '.join(missing)}")
        self.missing = list(missing)


class MalformedMarkers(OracleloomError):
    code = "malformed_markers"


class IncompleteReport(OracleloomError):
    code = "incomplete_report"


class PipelineStepFailed(OracleloomError):
    """A thinking step failed twice; carries the step index for diagnostics."""

    code = "step_failed"

    def __init__(self, step_index: int, cause: Exception):
        super().__init__(f"step {step_index} failed: {cause}")
        self.step_index = step_index
        self.cause = cause
