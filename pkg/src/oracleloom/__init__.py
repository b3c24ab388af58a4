"""Keyword sentiment ingestion, archival, forecasting, and report assembly."""

from .errors import OracleloomError, ValidationError
from .model import (
    AnalysisRequest,
    DateWindow,
    ReportKind,
    ScoreWeights,
    SourceCategory,
    SourceProfile,
    default_registry,
    normalize_weights,
    parse_query,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisRequest",
    "DateWindow",
    "OracleloomError",
    "ReportKind",
    "ScoreWeights",
    "SourceCategory",
    "SourceProfile",
    "ValidationError",
    "default_registry",
    "normalize_weights",
    "parse_query",
    "__version__",
]
