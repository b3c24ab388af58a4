"""Report generation: crawl/replay, score, archive, synthesize, assemble.

Numbers and narrative are kept apart on purpose. Chart data, forecasts,
and citations are computed from scored documents and stored records; the
language model only ever writes prose around them. With the stub provider
the whole path is deterministic, which is what the golden-file tests pin
down byte for byte.
"""

from __future__ import annotations

import datetime as dt
import hashlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

from .canonical import dumps_canonical, dumps_canonical_bytes
from .crawler import (
    RawDocument,
    SourceAdapterConfig,
    AdapterMode,
    assign_timestamp,
    dedupe,
    fetch_many,
    fetch_url,
)
from .errors import (
    IncompleteReport,
    MalformedMarkers,
    MissingSection,
    NoData,
    PipelineStepFailed,
    ValidationError,
)
from .forecasting import ForecastResult, default_forecast
from .gateway import CompletionRequest, Gateway
from .model import AnalysisRequest, ReportKind, default_registry
from .prompts import (
    DEFAULT_ROLE,
    SECTION_IDS,
    RolePrompt,
    SectionEnvelope,
    ThinkingStep,
    THINKING_STEPS,
    corrective_suffix,
    excerpt_documents,
    excerpt_records,
    parse_sections,
    render_role_prompt,
    render_step_prompt,
    render_thinking_steps,
)
from .records import DailyRecord, Fill, RecordStore, SeriesField, to_series
from .sentiment import (
    LexiconEntry,
    Sentiment,
    ScoredDocument,
    TimestampConfidence,
    aggregate_daily,
    classify,
    default_lexicon,
    default_stopwords,
    score_document,
    tokenize,
)
from .timeutil import format_rfc3339, utc_now

UTC = dt.timezone.utc

EXCERPT_DOC_CAP = 12
CITATIONS_PER_SECTION = 5
TOP_TERMS_K = 10
WORD_CAP = 2000
RECORDS_EXCERPT_CHARS = 4000

# Sections that carry prose and therefore carry citations.
PROSE_SECTIONS = (
    "introduction",
    "summary",
    "cause_analysis",
    "risk_assessment",
    "policy_suggestions",
    "associated_words",
    "conclusion",
)
URL_SECTION_IDS = ("introduction", "summary", "conclusion", "chart_data")

# When the rendered report runs past the word cap, sections give up text
# in this order; the conclusion is cut last.
TRUNCATION_PRIORITY = (
    "associated_words",
    "policy_suggestions",
    "risk_assessment",
    "cause_analysis",
    "summary",
    "introduction",
    "conclusion",
)

# Forecast slope steeper than this (per day, downward) flags rising risk.
RISK_SLOPE_THRESHOLD = -0.02


@dataclass(frozen=True)
class ChartData:
    positive: float
    neutral: float
    negative: float
    trend: tuple[tuple[dt.date, float], ...] = ()
    term_bars: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        total = self.positive + self.neutral + self.negative
        # serialized fractions are rounded to six decimals, so a reloaded
        # distribution can drift a hair from an exact 1.0
        if not (abs(total - 1.0) <= 5e-6 or total == 0.0):
            raise ValidationError(f"distribution sums to {total}, expected 1 or 0")
        for prev, cur in zip(self.trend, self.trend[1:]):
            if cur[0] != prev[0] + dt.timedelta(days=1):
                raise ValidationError("trend days must be contiguous")

    @property
    def distribution(self) -> dict[str, float]:
        return {
            "positive": self.positive,
            "neutral": self.neutral,
            "negative": self.negative,
        }

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "sentiment_distribution": self.distribution,
            "trend": [[day.isoformat(), score] for day, score in self.trend],
            "term_bars": [[term, count] for term, count in self.term_bars],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "ChartData":
        dist = obj["sentiment_distribution"]
        return cls(
            positive=dist["positive"],
            neutral=dist["neutral"],
            negative=dist["negative"],
            trend=tuple(
                (dt.date.fromisoformat(day), float(score)) for day, score in obj["trend"]
            ),
            term_bars=tuple((term, int(count)) for term, count in obj["term_bars"]),
        )


@dataclass(frozen=True)
class Citation:
    claim_section: str
    url: str
    source_id: str
    timestamp_confidence: TimestampConfidence

    def to_json_obj(self) -> dict[str, str]:
        return {
            "claim_section": self.claim_section,
            "url": self.url,
            "source_id": self.source_id,
            "timestamp_confidence": self.timestamp_confidence.value,
        }


@dataclass(frozen=True)
class StepTrace:
    step_index: int
    provider_id: str
    tokens_in: int
    tokens_out: int
    latency_ms: int
    attempt: int

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "step_index": self.step_index,
            "provider_id": self.provider_id,
            "tokens_in": self.tokens_in,
            "tokens_out": self.tokens_out,
            "latency_ms": self.latency_ms,
            "attempt": self.attempt,
        }


@dataclass(frozen=True)
class UrlAssessment:
    url: str
    polarity: float
    subjectivity: float
    score: float
    label: Sentiment
    timestamp: dt.datetime
    timestamp_confidence: TimestampConfidence

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "url": self.url,
            "polarity": self.polarity,
            "subjectivity": self.subjectivity,
            "score": self.score,
            "label": self.label.value,
            "timestamp": format_rfc3339(self.timestamp),
            "timestamp_confidence": self.timestamp_confidence.value,
        }


@dataclass(frozen=True)
class Report:
    id: str
    request: AnalysisRequest
    sections: Mapping[str, str]
    citations: tuple[Citation, ...]
    charts: ChartData
    created_at: dt.datetime
    pipeline_trace: tuple[StepTrace, ...]
    forecast: ForecastResult | None = None
    risk_level: str | None = None
    url_assessment: UrlAssessment | None = None

    def __post_init__(self) -> None:
        required = URL_SECTION_IDS if self.request.kind is ReportKind.Url else SECTION_IDS
        missing = [sid for sid in required if sid not in self.sections]
        if missing:
            raise ValidationError(f"report missing sections: {missing}")
        if self.request.kind is ReportKind.Future and self.forecast is None:
            raise ValidationError("future report must carry a forecast")

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "id": self.id,
            "request": self.request.to_json_obj(),
            "sections": dict(self.sections),
            "citations": [c.to_json_obj() for c in self.citations],
            "charts": self.charts.to_json_obj(),
            "created_at": format_rfc3339(self.created_at),
            "pipeline_trace": [t.to_json_obj() for t in self.pipeline_trace],
        }
        if self.forecast is not None:
            obj["forecast"] = self.forecast.to_json_obj()
        if self.risk_level is not None:
            obj["risk_level"] = self.risk_level
        if self.url_assessment is not None:
            obj["url_assessment"] = self.url_assessment.to_json_obj()
        return obj


@dataclass
class PipelineDeps:
    """Everything a report run needs; swap pieces in tests."""

    adapters: Sequence[SourceAdapterConfig]
    store: RecordStore
    gateway: Gateway
    provider_id: str = "stub"
    role: RolePrompt = DEFAULT_ROLE
    lexicon: Mapping[str, LexiconEntry] | None = None
    stopwords: frozenset[str] | None = None
    max_prompt_tokens: int | None = None
    # phase callback ("crawling" | "scoring" | "synthesizing", step index);
    # the job runner in the HTTP service listens here
    progress: Callable[[str, int | None], None] | None = None

    def notify(self, phase: str, step: int | None = None) -> None:
        if self.progress is not None:
            self.progress(phase, step)

    def lexicon_or_default(self) -> Mapping[str, LexiconEntry]:
        return self.lexicon if self.lexicon is not None else default_lexicon()

    def stopwords_or_default(self) -> frozenset[str]:
        return self.stopwords if self.stopwords is not None else default_stopwords()

    def all_replay(self) -> bool:
        return all(c.mode is AdapterMode.Replay for c in self.adapters)


def _pinned_generated_at(day: dt.date) -> dt.datetime:
    # end-of-day stamp keeps replay records byte-stable across runs
    return dt.datetime.combine(day, dt.time(23, 59, 59), tzinfo=UTC)


def _score_raw(
    doc: RawDocument,
    lexicon: Mapping[str, LexiconEntry],
    request: AnalysisRequest,
) -> ScoredDocument:
    ts, confidence = assign_timestamp(doc)
    text = f"{doc.title}\n{doc.body}".strip()
    sentiment = score_document(text, lexicon).with_weights(request.score_weights)
    return ScoredDocument(
        url=doc.url,
        source_id=doc.source_id,
        published_at=ts,
        timestamp_confidence=confidence,
        text=text,
        sentiment=sentiment,
    )


def _effective_weights(request: AnalysisRequest) -> dict[str, float]:
    if request.source_weights:
        return dict(request.source_weights)
    return {sid: profile.default_weight for sid, profile in default_registry().items()}


def build_chart_data(
    records: Sequence[DailyRecord],
    docs: Sequence[ScoredDocument],
    k: int = TOP_TERMS_K,
    *,
    stopwords: frozenset[str] | None = None,
    exclude_terms: Sequence[str] = (),
) -> ChartData:
    """Chart numbers straight from the data; the LLM never touches these.

    Without freshly scored docs (archive-only runs) the distribution and
    term bars come from the stored per-day counts instead.
    """
    from .sentiment import top_terms

    if docs:
        labels = [classify(d.sentiment.score) for d in docs]
        n = len(labels)
        positive = labels.count(Sentiment.Positive) / n
        neutral = labels.count(Sentiment.Neutral) / n
        negative = labels.count(Sentiment.Negative) / n
        bars = top_terms(
            docs,
            stopwords if stopwords is not None else default_stopwords(),
            k,
            exclude=exclude_terms,
        )
    else:
        counts = [0, 0, 0]
        merged: Counter[str] = Counter()
        for record in records:
            if record.synthetic:
                continue
            for stats in record.per_source.values():
                counts[0] += stats.class_counts.positive
                counts[1] += stats.class_counts.neutral
                counts[2] += stats.class_counts.negative
            for term, freq in record.top_terms:
                merged[term] += freq
        n = sum(counts)
        if n:
            positive, neutral, negative = (c / n for c in counts)
        else:
            positive = neutral = negative = 0.0
        excluded = set(exclude_terms)
        bars = sorted(
            ((t, c) for t, c in merged.items() if t not in excluded),
            key=lambda item: (-item[1], item[0]),
        )[:k]
    return ChartData(
        positive=positive,
        neutral=neutral,
        negative=negative,
        trend=tuple((r.day, r.combined.score) for r in records),
        term_bars=tuple(bars),
    )


def _snapshot_id(payload: Any) -> str:
    return hashlib.sha256(dumps_canonical_bytes(payload)).hexdigest()[:16]


def _report_id(request: AnalysisRequest, snapshot: str) -> str:
    return _snapshot_id({"request": request.to_json_obj(), "snapshot": snapshot})


def _run_step(
    deps: PipelineDeps,
    step: ThinkingStep,
    prompt: str,
    system_prompt: str,
) -> tuple[dict[str, str], StepTrace]:
    """One completion call; a reply missing sections gets exactly one
    corrective retry before the pipeline aborts with the step index."""

    def call(text: str):
        response = deps.gateway.complete(
            CompletionRequest(
                system_prompt=system_prompt,
                user_prompt=text,
                provider_id=deps.provider_id,
            )
        )
        return response, parse_sections(response.text, step.expected_sections)

    try:
        response, fragment = call(prompt)
    except MissingSection as first:
        try:
            response, fragment = call(prompt + "\n\n" + corrective_suffix(first.missing))
        except (MissingSection, MalformedMarkers) as second:
            raise PipelineStepFailed(step.index, second) from second
    except MalformedMarkers as exc:
        # markers broken beyond the one permitted repair
        raise PipelineStepFailed(step.index, exc) from exc
    trace = StepTrace(
        step_index=step.index,
        provider_id=deps.provider_id,
        tokens_in=response.tokens_in,
        tokens_out=response.tokens_out,
        latency_ms=response.latency_ms,
        attempt=response.attempt,
    )
    return fragment, trace


def _forecast_risk(last_level: float, forecast: ForecastResult) -> str:
    if not forecast.predictions:
        return "stable"
    slope = (forecast.predictions[-1] - last_level) / len(forecast.predictions)
    return "rising" if slope < RISK_SLOPE_THRESHOLD else "stable"


def _citations_for(
    sections: Sequence[str], docs: Sequence[RawDocument]
) -> tuple[Citation, ...]:
    cited = docs[:CITATIONS_PER_SECTION]
    out = []
    for sid in sections:
        for doc in cited:
            ts, confidence = assign_timestamp(doc)
            out.append(
                Citation(
                    claim_section=sid,
                    url=doc.url,
                    source_id=doc.source_id,
                    timestamp_confidence=confidence,
                )
            )
    return tuple(out)


def ingest_window(
    request: AnalysisRequest, deps: PipelineDeps
) -> tuple[list[RawDocument], list[ScoredDocument]]:
    """Crawl one keyword window, score every document, archive day records.

    Returns the deduped raw documents and their scored counterparts so a
    report run can build excerpts and charts without re-reading the store.
    Also the whole of the standalone ingest path.
    """
    window = request.window
    replay = deps.all_replay()
    lexicon = deps.lexicon_or_default()
    stopwords = deps.stopwords_or_default()

    deps.notify("crawling")
    by_source = fetch_many(
        deps.adapters,
        request.keyword,
        window,
        request.synonyms,
        missing_ok=True,
    )
    merged: list[RawDocument] = []
    for sid in sorted(by_source):
        merged.extend(by_source[sid])
    merged.sort(key=lambda d: (assign_timestamp(d)[0], d.url))
    raw_docs = dedupe(merged)

    deps.notify("scoring")
    scored = [_score_raw(d, lexicon, request) for d in raw_docs]

    weights = _effective_weights(request)
    by_day: dict[dt.date, list[ScoredDocument]] = {}
    for doc in scored:
        by_day.setdefault(doc.published_at.date(), []).append(doc)
    for day in sorted(by_day):
        record = aggregate_daily(
            by_day[day],
            day,
            weights,
            keyword=request.keyword,
            stopwords=stopwords,
            generated_at=_pinned_generated_at(day) if replay else None,
        )
        deps.store.put_record(record)
    return raw_docs, scored


def generate_report(request: AnalysisRequest, deps: PipelineDeps) -> Report:
    if request.kind not in (ReportKind.Past, ReportKind.Present, ReportKind.Future):
        raise ValidationError("generate_report handles past/present/future kinds")
    window = request.window
    replay = deps.all_replay()
    store = deps.store
    stopwords = deps.stopwords_or_default()

    archived = all(
        store.get_record(request.keyword, day) is not None for day in window.days()
    )

    raw_docs: list[RawDocument] = []
    scored: list[ScoredDocument] = []
    if request.kind is ReportKind.Past and archived:
        # history is already on disk; a fresh crawl would only mutate it
        deps.notify("scoring")
    else:
        raw_docs, scored = ingest_window(request, deps)

    records = store.get_range(
        request.keyword, window.start, window.end, fill=Fill.CARRY_FORWARD
    )
    if not scored and not records:
        raise NoData(
            f"no documents or records for {request.keyword!r} in "
            f"{window.start}..{window.end}"
        )

    keyword_tokens = tokenize(request.keyword)
    charts = build_chart_data(
        records,
        scored,
        TOP_TERMS_K,
        stopwords=stopwords,
        exclude_terms=keyword_tokens,
    )
    chart_json = dumps_canonical(charts.to_json_obj())

    forecast = None
    risk_level = None
    if request.kind is ReportKind.Future:
        series = to_series(records, SeriesField.CombinedScore)
        forecast = default_forecast(series)
        risk_level = _forecast_risk(series.values[-1], forecast)

    excerpt_docs = raw_docs[:EXCERPT_DOC_CAP]
    rec_excerpt = excerpt_records(records, RECORDS_EXCERPT_CHARS)
    doc_excerpt = excerpt_documents(excerpt_docs, EXCERPT_DOC_CAP)
    top_term_names = [term for term, _ in charts.term_bars]

    system_prompt = render_role_prompt(deps.role)
    envelope = SectionEnvelope()
    traces: list[StepTrace] = []
    rendered = render_thinking_steps(
        request,
        rec_excerpt,
        doc_excerpt,
        role=deps.role,
        chart_json=chart_json,
        top_terms=top_term_names,
        max_prompt_tokens=deps.max_prompt_tokens,
    )
    for step, prompt in rendered:
        deps.notify("synthesizing", step.index)
        fragment, trace = _run_step(deps, step, prompt, system_prompt)
        envelope.merge(fragment)
        traces.append(trace)

    # chart numbers are authoritative; whatever the model echoed is replaced
    envelope.sections["chart_data"] = chart_json

    created_at = (
        dt.datetime.combine(window.end, dt.time(0, 0), tzinfo=UTC)
        if replay
        else utc_now()
    )
    snapshot = _snapshot_id(
        [d.to_json_obj() for d in raw_docs]
        if raw_docs
        else [r.to_json_obj() for r in records]
    )
    return Report(
        id=_report_id(request, snapshot),
        request=request,
        sections=dict(envelope.sections),
        citations=_citations_for(PROSE_SECTIONS, excerpt_docs),
        charts=charts,
        created_at=created_at,
        pipeline_trace=tuple(traces),
        forecast=forecast,
        risk_level=risk_level,
    )


def url_thinking_steps() -> tuple[ThinkingStep, ...]:
    """Condensed plan for single-page reports: introduce, summarize,
    conclude, final-check. Chart data is injected locally."""
    by_index = {s.index: s for s in THINKING_STEPS}
    return (
        ThinkingStep(1, by_index[1].instruction, ("introduction",)),
        ThinkingStep(2, by_index[2].instruction, ("summary",)),
        ThinkingStep(6, by_index[6].instruction, ("conclusion",)),
        ThinkingStep(8, by_index[8].instruction, ()),
    )


def generate_url_report(request: AnalysisRequest, deps: PipelineDeps) -> Report:
    if request.kind is not ReportKind.Url or not request.url:
        raise ValidationError("url report needs kind=url and a url")
    deps.notify("crawling")
    raw = fetch_url(request.url, deps.adapters)
    if not raw.body.strip():
        raise NoData(f"no extractable text at {request.url}")
    lexicon = deps.lexicon_or_default()
    stopwords = deps.stopwords_or_default()
    deps.notify("scoring")
    scored = _score_raw(raw, lexicon, request)

    charts = build_chart_data(
        [], [scored], TOP_TERMS_K, stopwords=stopwords, exclude_terms=tokenize(request.keyword)
    )
    chart_json = dumps_canonical(charts.to_json_obj())
    doc_excerpt = excerpt_documents([raw], 1)

    system_prompt = render_role_prompt(deps.role)
    envelope = SectionEnvelope()
    traces: list[StepTrace] = []
    for step in url_thinking_steps():
        deps.notify("synthesizing", step.index)
        prompt = render_step_prompt(
            step,
            request,
            "",
            doc_excerpt,
            role=deps.role,
            chart_json=chart_json,
            top_terms=[term for term, _ in charts.term_bars],
        )
        fragment, trace = _run_step(deps, step, prompt, system_prompt)
        envelope.merge(fragment)
        traces.append(trace)
    envelope.sections["chart_data"] = chart_json

    replay = deps.all_replay()
    created_at = (
        dt.datetime.combine(request.window.end, dt.time(0, 0), tzinfo=UTC)
        if replay
        else utc_now()
    )
    assessment = UrlAssessment(
        url=raw.url,
        polarity=scored.sentiment.polarity,
        subjectivity=scored.sentiment.subjectivity,
        score=scored.sentiment.score,
        label=classify(scored.sentiment.score),
        timestamp=scored.published_at,
        timestamp_confidence=scored.timestamp_confidence,
    )
    return Report(
        id=_report_id(request, _snapshot_id(raw.to_json_obj())),
        request=request,
        sections=dict(envelope.sections),
        citations=_citations_for(("introduction", "summary", "conclusion"), [raw]),
        charts=charts,
        created_at=created_at,
        pipeline_trace=tuple(traces),
        url_assessment=assessment,
    )


# --- rendering -------------------------------------------------------------

SECTION_TITLES = {
    "introduction": "Introduction",
    "summary": "Summary",
    "cause_analysis": "Cause Analysis",
    "risk_assessment": "Risk Assessment",
    "policy_suggestions": "Policy Suggestions",
    "associated_words": "Associated Words",
    "conclusion": "Conclusion",
}


def truncate_to_word_cap(
    sections: Mapping[str, str],
    cap: int = WORD_CAP,
    priority: Sequence[str] = TRUNCATION_PRIORITY,
) -> dict[str, str]:
    """Trim section bodies, harshest-first, until the total fits the cap."""
    out = {sid: text for sid, text in sections.items()}
    total = sum(len(text.split()) for sid, text in out.items() if sid != "chart_data")
    overflow = total - cap
    if overflow <= 0:
        return out
    for sid in priority:
        if overflow <= 0:
            break
        words = out.get(sid, "").split()
        if not words:
            continue
        keep = max(0, len(words) - overflow)
        overflow -= len(words) - keep
        out[sid] = " ".join(words[:keep])
        if keep:
            out[sid] += " [truncated]"
        else:
            out[sid] = "[truncated]"
    return out


def _citation_lines(report: Report, sid: str) -> list[str]:
    cites = [c for c in report.citations if c.claim_section == sid]
    if not cites:
        return []
    lines = ["", "Sources:"]
    for c in cites:
        if report.request.show_urls:
            lines.append(f"- {c.source_id}: {c.url} ({c.timestamp_confidence.value})")
        else:
            lines.append(f"- {c.source_id} ({c.timestamp_confidence.value})")
    return lines


def render_report_markdown(report: Report) -> str:
    kind = report.request.kind
    required = URL_SECTION_IDS if kind is ReportKind.Url else SECTION_IDS
    missing = [sid for sid in required if sid not in report.sections]
    if missing:
        raise IncompleteReport(f"missing sections: {missing}")

    order = (
        ("introduction", "summary", "conclusion")
        if kind is ReportKind.Url
        else (
            "introduction",
            "summary",
            "cause_analysis",
            "risk_assessment",
            "policy_suggestions",
            "associated_words",
            "conclusion",
        )
    )
    sections = truncate_to_word_cap(
        {sid: report.sections[sid] for sid in order}
    )

    window = report.request.window
    lines = [
        f"# Sentiment Report: {report.request.keyword}",
        "",
        f"- Kind: {kind.value}",
        f"- Window: {window.start.isoformat()} to {window.end.isoformat()}",
        f"- Generated: {format_rfc3339(report.created_at)}",
        f"- Report id: {report.id}",
    ]
    if report.risk_level is not None:
        lines.append(f"- Risk level: {report.risk_level}")
    if report.url_assessment is not None:
        a = report.url_assessment
        lines.append(
            f"- Source URL: {a.url} ({a.timestamp_confidence.value} "
            f"{format_rfc3339(a.timestamp)})"
        )

    for sid in order:
        lines += ["", f"## {SECTION_TITLES[sid]}", "", sections[sid]]
        lines += _citation_lines(report, sid)
        if sid == "summary":
            lines += [
                "",
                "## Charts",
                "",
                "![Sentiment distribution](pie.svg)",
                "![Daily combined-score trend](trend.svg)",
                "![Frequent terms](bars.svg)",
            ]

    if report.url_assessment is not None:
        a = report.url_assessment
        lines += [
            "",
            "## Page Assessment",
            "",
            f"- Label: {a.label.value}",
            f"- Polarity: {a.polarity:+.4f}",
            f"- Subjectivity: {a.subjectivity:.4f}",
            f"- Combined score: {a.score:+.4f}",
        ]

    if report.forecast is not None:
        f = report.forecast
        lines += [
            "",
            f"## Outlook ({f.horizon}-day forecast)",
            "",
            f"- Model: {f.model_id.value}",
        ]
        for i, value in enumerate(f.predictions, start=1):
            day = window.end + dt.timedelta(days=i)
            lines.append(f"- {day.isoformat()}: {value:+.4f}")
        if report.risk_level is not None:
            lines.append(f"- Risk: {report.risk_level}")

    return "\n".join(lines) + "\n"


# --- deterministic SVG charts ----------------------------------------------

CANVAS_W = 640
CANVAS_H = 400
PALETTE = (
    "#2e7d32",  # positive
    "#9e9e9e",  # neutral
    "#c62828",  # negative
    "#1565c0",
    "#e65100",
    "#6a1b9a",
    "#00838f",
    "#f9a825",
    "#4e342e",
    "#37474f",
    "#ad1457",
    "#558b2f",
)


def _f(value: float) -> str:
    return f"{value:.2f}"


def _svg_open() -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_W}" '
        f'height="{CANVAS_H}" viewBox="0 0 {CANVAS_W} {CANVAS_H}">'
        f'<rect width="{CANVAS_W}" height="{CANVAS_H}" fill="#ffffff"/>'
    )


def _svg_text(x: float, y: float, text: str, *, size: int = 14, anchor: str = "start") -> str:
    return (
        f'<text x="{_f(x)}" y="{_f(y)}" font-family="sans-serif" '
        f'font-size="{size}" text-anchor="{anchor}" fill="#222222">{text}</text>'
    )


def _placeholder(title: str) -> str:
    return (
        _svg_open()
        + _svg_text(CANVAS_W / 2, 30, title, size=16, anchor="middle")
        + _svg_text(CANVAS_W / 2, CANVAS_H / 2, "No data in window", anchor="middle")
        + "</svg>"
    )


def _pie_svg(charts: ChartData) -> str:
    import math

    slices = [
        ("Positive", charts.positive, PALETTE[0]),
        ("Neutral", charts.neutral, PALETTE[1]),
        ("Negative", charts.negative, PALETTE[2]),
    ]
    total = sum(fraction for _, fraction, _ in slices)
    if total == 0.0:
        return _placeholder("Sentiment distribution")
    cx, cy, r = 200.0, 210.0, 150.0
    parts = [_svg_open(), _svg_text(CANVAS_W / 2, 30, "Sentiment distribution", size=16, anchor="middle")]
    angle = -90.0
    for label, fraction, color in slices:
        if fraction <= 0.0:
            continue
        sweep = 360.0 * fraction
        if sweep >= 360.0 - 1e-9:
            parts.append(
                f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="{color}"/>'
            )
            break
        a0 = math.radians(angle)
        a1 = math.radians(angle + sweep)
        x0, y0 = cx + r * math.cos(a0), cy + r * math.sin(a0)
        x1, y1 = cx + r * math.cos(a1), cy + r * math.sin(a1)
        large = 1 if sweep > 180.0 else 0
        parts.append(
            f'<path d="M {_f(cx)} {_f(cy)} L {_f(x0)} {_f(y0)} '
            f'A {_f(r)} {_f(r)} 0 {large} 1 {_f(x1)} {_f(y1)} Z" fill="{color}"/>'
        )
        angle += sweep
    legend_y = 120.0
    for label, fraction, color in slices:
        parts.append(
            f'<rect x="400.00" y="{_f(legend_y - 12)}" width="14" height="14" fill="{color}"/>'
        )
        parts.append(_svg_text(422, legend_y, f"{label} {fraction * 100:.2f}%"))
        legend_y += 28.0
    parts.append("</svg>")
    return "".join(parts)


def _trend_svg(charts: ChartData) -> str:
    if not charts.trend:
        return _placeholder("Daily combined score")
    left, right, top, bottom = 50.0, 620.0, 50.0, 360.0
    n = len(charts.trend)

    def x_at(i: int) -> float:
        if n == 1:
            return (left + right) / 2
        return left + i * (right - left) / (n - 1)

    def y_at(value: float) -> float:
        # fixed [-1, 1] domain keeps the geometry stable across reports
        clamped = max(-1.0, min(1.0, value))
        return top + (1.0 - clamped) / 2.0 * (bottom - top)

    parts = [
        _svg_open(),
        _svg_text(CANVAS_W / 2, 30, "Daily combined score", size=16, anchor="middle"),
        f'<line x1="{_f(left)}" y1="{_f(top)}" x2="{_f(left)}" y2="{_f(bottom)}" stroke="#222222"/>',
        f'<line x1="{_f(left)}" y1="{_f(bottom)}" x2="{_f(right)}" y2="{_f(bottom)}" stroke="#222222"/>',
        f'<line x1="{_f(left)}" y1="{_f(y_at(0.0))}" x2="{_f(right)}" y2="{_f(y_at(0.0))}" '
        f'stroke="#bbbbbb" stroke-dasharray="4 3"/>',
        _svg_text(left - 6, y_at(1.0) + 5, "+1", anchor="end", size=12),
        _svg_text(left - 6, y_at(0.0) + 5, "0", anchor="end", size=12),
        _svg_text(left - 6, y_at(-1.0) + 5, "-1", anchor="end", size=12),
    ]
    points = " ".join(
        f"{_f(x_at(i))},{_f(y_at(score))}" for i, (_, score) in enumerate(charts.trend)
    )
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="{PALETTE[3]}" stroke-width="2"/>'
    )
    for i, (_, score) in enumerate(charts.trend):
        parts.append(
            f'<circle cx="{_f(x_at(i))}" cy="{_f(y_at(score))}" r="3.00" fill="{PALETTE[3]}"/>'
        )
    first_day, _ = charts.trend[0]
    last_day, _ = charts.trend[-1]
    parts.append(_svg_text(left, 385, first_day.isoformat(), size=12))
    parts.append(_svg_text(right, 385, last_day.isoformat(), size=12, anchor="end"))
    parts.append("</svg>")
    return "".join(parts)


def _bars_svg(charts: ChartData) -> str:
    if not charts.term_bars:
        return _placeholder("Frequent terms")
    parts = [
        _svg_open(),
        _svg_text(CANVAS_W / 2, 30, "Frequent terms", size=16, anchor="middle"),
    ]
    bars = charts.term_bars[:TOP_TERMS_K]
    max_count = max(count for _, count in bars)
    slot = 340.0 / len(bars)
    bar_h = min(22.0, slot - 6.0)
    x0 = 170.0
    for i, (term, count) in enumerate(bars):
        y = 50.0 + i * slot
        width = 440.0 * count / max_count
        color = PALETTE[i % len(PALETTE)]
        parts.append(
            f'<rect x="{_f(x0)}" y="{_f(y)}" width="{_f(width)}" '
            f'height="{_f(bar_h)}" fill="{color}"/>'
        )
        parts.append(_svg_text(x0 - 8, y + bar_h - 6, term, anchor="end", size=12))
        parts.append(_svg_text(x0 + width + 6, y + bar_h - 6, str(count), size=12))
    parts.append("</svg>")
    return "".join(parts)


def render_charts_svg(charts: ChartData) -> dict[str, str]:
    """Three fixed-canvas SVGs; same data in, same bytes out."""
    return {
        "pie": _pie_svg(charts),
        "trend": _trend_svg(charts),
        "bars": _bars_svg(charts),
    }


def write_report_files(report: Report, out_dir: str | Path, *, png: bool = True) -> Path:
    """Persist `report.json`, `report.md`, and the three SVGs into the
    given directory; PNG renders land alongside unless disabled."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_bytes(dumps_canonical_bytes(report.to_json_obj()))
    (out / "report.md").write_text(render_report_markdown(report), encoding="utf-8")
    for name, svg in render_charts_svg(report.charts).items():
        (out / f"{name}.svg").write_text(svg, encoding="utf-8")
    if png:
        from .figures import render_png_charts

        render_png_charts(report.charts, out)
    return out


def write_report_artifacts(
    report: Report, root: str | Path, *, png: bool = True
) -> Path:
    return write_report_files(report, Path(root) / "reports" / report.id, png=png)
