"""Core domain types and chat-query parsing.

Everything here is an immutable value object. Construction validates
invariants and raises a typed error from :mod:`oracleloom.errors`, so a
request that exists is a request that is well-formed.
"""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, Mapping

from .errors import AllZero, BadDate, NoKeyword, ValidationError


class ReportKind(Enum):
    Past = "past"
    Present = "present"
    Future = "future"
    Url = "url"


class SourceCategory(Enum):
    OfficialMedia = "official_media"
    SearchEngine = "search_engine"
    SocialMedia = "social_media"


@dataclass(frozen=True)
class DateWindow:
    """Inclusive range of UTC calendar dates."""

    start: dt.date
    end: dt.date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise BadDate(f"window reversed: {self.start} > {self.end}")

    def days(self) -> Iterator[dt.date]:
        d = self.start
        while d <= self.end:
            yield d
            d += dt.timedelta(days=1)

    def __contains__(self, day: dt.date) -> bool:
        return self.start <= day <= self.end

    def __len__(self) -> int:
        return (self.end - self.start).days + 1

    def to_json_obj(self) -> dict[str, str]:
        return {"start": self.start.isoformat(), "end": self.end.isoformat()}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "DateWindow":
        return cls(dt.date.fromisoformat(obj["start"]), dt.date.fromisoformat(obj["end"]))


@dataclass(frozen=True)
class ScoreWeights:
    """Polarity/subjectivity weights, normalized to sum 1 at construction."""

    w_p: float = 1.0
    w_s: float = 0.0

    def __post_init__(self) -> None:
        if self.w_p < 0 or self.w_s < 0:
            raise ValidationError(f"weights must be non-negative: ({self.w_p}, {self.w_s})")
        total = self.w_p + self.w_s
        if total == 0:
            raise AllZero("both score weights are zero")
        # Skip the division when already normalized so exact literals
        # like (0.7, 0.3) survive bit-for-bit.
        if total != 1.0:
            object.__setattr__(self, "w_p", self.w_p / total)
            object.__setattr__(self, "w_s", self.w_s / total)

    def to_json_obj(self) -> dict[str, float]:
        return {"w_p": self.w_p, "w_s": self.w_s}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "ScoreWeights":
        return cls(float(obj["w_p"]), float(obj["w_s"]))


@dataclass(frozen=True)
class SourceProfile:
    id: str
    category: SourceCategory
    default_weight: float = 1.0
    locale: str = "en-US"

    def __post_init__(self) -> None:
        if not self.id or not re.fullmatch(r"[a-z0-9_]+", self.id):
            raise ValidationError(f"source id must be a lowercase token: {self.id!r}")
        if self.default_weight < 0:
            raise ValidationError(f"source weight must be non-negative: {self.default_weight}")


def default_registry() -> dict[str, SourceProfile]:
    """The five built-in media sources. Config may override or extend."""
    profiles = [
        SourceProfile("bing_news", SourceCategory.OfficialMedia),
        SourceProfile("google_news", SourceCategory.OfficialMedia),
        SourceProfile("google_search", SourceCategory.SearchEngine),
        SourceProfile("twitter", SourceCategory.SocialMedia),
        SourceProfile("yahoo_hot", SourceCategory.SearchEngine, locale="ja-JP"),
    ]
    return {p.id: p for p in profiles}


def normalize_weights(raw: Mapping[str, float]) -> dict[str, float]:
    """Scale a weight map so values sum to 1. Order-independent."""
    for sid, w in raw.items():
        if w < 0:
            raise ValidationError(f"negative weight for {sid!r}: {w}")
    total = sum(raw[sid] for sid in sorted(raw))
    if total == 0:
        raise AllZero("all source weights are zero")
    return {sid: w / total for sid, w in raw.items()}


@dataclass(frozen=True)
class AnalysisRequest:
    keyword: str
    window: DateWindow
    kind: ReportKind = ReportKind.Present
    synonyms: tuple[str, ...] = ()
    url: str | None = None
    source_weights: Mapping[str, float] = field(default_factory=dict)
    score_weights: ScoreWeights = field(default_factory=ScoreWeights)
    show_urls: bool = True

    def __post_init__(self) -> None:
        if not self.keyword or not self.keyword.strip():
            raise NoKeyword("request keyword is empty")
        if self.kind is ReportKind.Url:
            if not self.url or not re.match(r"^https?://", self.url):
                raise ValidationError("kind=url requires an absolute http(s) url")
        elif self.url is not None:
            raise ValidationError(f"url given for non-url report kind {self.kind.value}")
        if self.source_weights:
            for sid, w in self.source_weights.items():
                if w < 0:
                    raise ValidationError(f"negative weight for source {sid!r}")
            if all(w == 0 for w in self.source_weights.values()):
                raise AllZero("every source weight is zero")
        object.__setattr__(self, "synonyms", tuple(self.synonyms))
        object.__setattr__(self, "source_weights", dict(self.source_weights))

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "keyword": self.keyword,
            "synonyms": list(self.synonyms),
            "window": self.window.to_json_obj(),
            "kind": self.kind.value,
            "source_weights": {k: float(v) for k, v in self.source_weights.items()},
            "score_weights": self.score_weights.to_json_obj(),
            "show_urls": self.show_urls,
        }
        if self.url is not None:
            obj["url"] = self.url
        return obj

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "AnalysisRequest":
        return cls(
            keyword=obj["keyword"],
            window=DateWindow.from_json_obj(obj["window"]),
            kind=ReportKind(obj.get("kind", "present")),
            synonyms=tuple(obj.get("synonyms", ())),
            url=obj.get("url"),
            source_weights=dict(obj.get("source_weights", {})),
            score_weights=ScoreWeights.from_json_obj(
                obj.get("score_weights", {"w_p": 1.0, "w_s": 0.0})
            ),
            show_urls=bool(obj.get("show_urls", True)),
        )


# --- query grammar ---------------------------------------------------------

DEFAULT_WINDOW_DAYS = 14

_FUTURE_VERBS = ("predict", "forecast", "trend")
_PRESENT_VERBS = ("report", "analy")  # analysis / analyze / analyse

_MONTHS = {
    name: i + 1
    for i, name in enumerate(
        [
            "january", "february", "march", "april", "may", "june",
            "july", "august", "september", "october", "november", "december",
        ]
    )
}
for _name, _num in list(_MONTHS.items()):
    _MONTHS[_name[:3]] = _num

_ISO_DATE = re.compile(r"\b(\d{4})-(\d{2})-(\d{2})\b")
_LONG_DATE = re.compile(
    r"\b([A-Za-z]{3,9})\.?\s+(\d{1,2})(?:st|nd|rd|th)?\s*,?\s+(\d{4})\b"
)
_URL = re.compile(r"https?://[^\s\"'<>]+")
_QUOTED = re.compile(r"\"([^\"]+)\"|(?:(?<=\s)|^)'([^']+)'(?=[\s.,!?;:]|$)")

_STOP_AT = frozenset({"from", "to", "since", "until", "between", "during", "over"})
_ARTICLES = ("the", "a", "an", "this", "that", "these", "those", "my", "our")


def _parse_date_phrase(text: str, start_pos: int) -> tuple[dt.date, int, int] | None:
    """Match a date at/after ``start_pos``; return (date, span_start, span_end).

    Raises BadDate for phrases shaped like dates that name impossible ones.
    """
    iso = _ISO_DATE.search(text, start_pos)
    long = None
    for cand in _LONG_DATE.finditer(text, start_pos):
        if cand.group(1).lower() in _MONTHS:
            long = cand
            break
    best = None
    for m in (iso, long):
        if m is not None and (best is None or m.start() < best.start()):
            best = m
    if best is None:
        return None
    try:
        if best.re is _ISO_DATE:
            day = dt.date(int(best.group(1)), int(best.group(2)), int(best.group(3)))
        else:
            month = _MONTHS[best.group(1).lower()]
            day = dt.date(int(best.group(3)), month, int(best.group(2)))
    except ValueError as exc:
        raise BadDate(f"unparseable date {best.group(0)!r}: {exc}") from None
    return day, best.start(), best.end()


def _extract_dates(message: str) -> list[tuple[str, dt.date]]:
    """All date mentions paired with the word immediately before each."""
    found: list[tuple[str, dt.date]] = []
    pos = 0
    while True:
        hit = _parse_date_phrase(message, pos)
        if hit is None:
            break
        day, s, e = hit
        prefix = message[:s].rstrip()
        prev = prefix.split()[-1].lower().strip(".,;:") if prefix.split() else ""
        found.append((prev, day))
        pos = e
    return found


def _resolve_window(
    dates: list[tuple[str, dt.date]], today: dt.date
) -> tuple[DateWindow, bool]:
    start: dt.date | None = None
    end: dt.date | None = None
    for prev, day in dates:
        if prev in ("from", "since", "between", "after") and start is None:
            start = day
        elif prev in ("to", "until", "and", "through", "before") and end is None:
            end = day
        elif start is None:
            start = day
        elif end is None:
            end = day
    explicit = start is not None or end is not None
    if start is not None and end is None:
        end = start + dt.timedelta(days=DEFAULT_WINDOW_DAYS - 1)
    elif end is not None and start is None:
        start = end - dt.timedelta(days=DEFAULT_WINDOW_DAYS - 1)
    elif start is None and end is None:
        end = today
        start = end - dt.timedelta(days=DEFAULT_WINDOW_DAYS - 1)
    assert start is not None and end is not None
    if start > end:
        raise BadDate(f"window reversed: {start} > {end}")
    return DateWindow(start, end), explicit


def _extract_keyword(message: str) -> str | None:
    quoted = [g1 or g2 for g1, g2 in _QUOTED.findall(message)]
    if quoted:
        return max(quoted, key=len).strip()
    # Noun phrase after the first standalone "on" or "of", up to a window
    # preposition or sentence punctuation, articles stripped.
    tokens = re.findall(r"[^\s]+", message)
    lowered = [t.lower().strip(".,!?;:") for t in tokens]
    try:
        idx = min(i for i, t in enumerate(lowered) if t in ("on", "of"))
    except ValueError:
        return None
    phrase: list[str] = []
    for raw, low in zip(tokens[idx + 1 :], lowered[idx + 1 :]):
        if low in _STOP_AT:
            break
        cleaned = raw.strip(".,!?;:\"'")
        if not cleaned:
            break
        phrase.append(cleaned)
        if raw != cleaned and raw[-1] in ".,!?;:":
            break  # phrase ended at punctuation
    while phrase and phrase[0].lower() in _ARTICLES:
        phrase.pop(0)
    joined = " ".join(phrase).strip()
    return joined or None


def _detect_kind(message: str) -> ReportKind:
    for token in re.findall(r"[a-z']+", message.lower()):
        if token.startswith(_FUTURE_VERBS):
            return ReportKind.Future
        if token.startswith(_PRESENT_VERBS):
            return ReportKind.Present
    return ReportKind.Present


def parse_query(
    message: str,
    registry: Mapping[str, SourceProfile] | None = None,
    *,
    today: dt.date | None = None,
) -> AnalysisRequest:
    """Turn a chat utterance into a structured request.

    The grammar is a fixed rule set, not a language model, so the same
    message and registry always produce the same request. ``today`` is
    injectable for reproducible parsing of relative defaults.
    """
    if not message or not message.strip():
        raise NoKeyword("empty query")
    if registry is None:
        registry = default_registry()
    if today is None:
        today = dt.datetime.now(dt.timezone.utc).date()

    url_match = _URL.search(message)
    url = url_match.group(0).rstrip(".,;:!?)") if url_match else None
    without_url = message if url_match is None else (
        message[: url_match.start()] + " " + message[url_match.end() :]
    )

    window, explicit = _resolve_window(_extract_dates(without_url), today)
    kind = _detect_kind(without_url)
    if kind is ReportKind.Present and explicit and window.end < today:
        kind = ReportKind.Past

    keyword = _extract_keyword(without_url)
    if url is not None:
        kind = ReportKind.Url
        if keyword is None:
            host = re.sub(r"^https?://", "", url).split("/")[0]
            keyword = host or None
    if keyword is None:
        raise NoKeyword(f"no keyword phrase found in {message!r}")

    weights = {sid: p.default_weight for sid, p in registry.items()}
    return AnalysisRequest(
        keyword=keyword,
        window=window,
        kind=kind,
        url=url,
        source_weights=weights,
    )
