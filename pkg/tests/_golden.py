"""Shared fixture-corpus report builder used by the pipeline tests and the
acceptance suite. One canonical request, one deterministic report."""

import datetime as dt
from pathlib import Path

from oracleloom.crawler import default_adapter_configs
from oracleloom.gateway import Gateway
from oracleloom.model import AnalysisRequest, DateWindow, ReportKind, ScoreWeights
from oracleloom.pipeline import PipelineDeps, generate_report
from oracleloom.records import RecordStore

GOLDEN_DIR = Path(__file__).parent / "golden" / "present_food_delivery"

WINDOW = DateWindow(dt.date(2024, 5, 1), dt.date(2024, 5, 14))


def canonical_request(kind=ReportKind.Present) -> AnalysisRequest:
    return AnalysisRequest(
        keyword="food delivery",
        window=WINDOW,
        kind=kind,
        synonyms=("takeout",),
        score_weights=ScoreWeights(0.7, 0.3),
    )


def fresh_deps(store_root) -> PipelineDeps:
    return PipelineDeps(
        adapters=default_adapter_configs(),
        store=RecordStore(store_root),
        gateway=Gateway(),
    )


def build_present_report(store_root):
    return generate_report(canonical_request(), fresh_deps(store_root))
