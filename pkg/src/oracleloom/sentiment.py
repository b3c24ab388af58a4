"""Lexicon-based polarity/subjectivity scoring and daily aggregation.

The scorer is a single deterministic pass: tokenize, match lexicon
entries, apply negation and intensity to each matched span, then average.
No model weights, no network. The default English lexicon ships as a data
file; the engine itself never hardcodes entries.
"""

from __future__ import annotations

import datetime as dt
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadThresholds,
    DayMismatch,
    EmptyLexicon,
    ValidationError,
)
from .model import ScoreWeights
from .records import ClassCounts, CombinedStats, DailyRecord, SourceStats
from .timeutil import utc_now

NEGATORS = frozenset({"not", "no", "never", "cannot"})
NEGATION_FACTOR = -0.5
NEGATION_LOOKBACK = 2

DEFAULT_THRESHOLDS = (-0.05, 0.05)

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z0-9]+)*")


class Sentiment(Enum):
    Negative = "negative"
    Neutral = "neutral"
    Positive = "positive"


class TimestampConfidence(Enum):
    Published = "published"
    Fetched = "fetched"


@dataclass(frozen=True)
class LexiconEntry:
    token: str
    polarity: float
    subjectivity: float
    intensity: float = 1.0

    def __post_init__(self) -> None:
        if not self.token or any(ch.isspace() for ch in self.token):
            raise ValidationError(f"bad lexicon token {self.token!r}")
        if not -1.0 <= self.polarity <= 1.0:
            raise ValidationError(f"polarity out of range for {self.token!r}")
        if not 0.0 <= self.subjectivity <= 1.0:
            raise ValidationError(f"subjectivity out of range for {self.token!r}")
        if self.intensity <= 0.0:
            raise ValidationError(f"intensity must be positive for {self.token!r}")


@dataclass(frozen=True)
class SentimentScore:
    polarity: float
    subjectivity: float
    score: float = 0.0
    matched_terms: int = 0

    def __post_init__(self) -> None:
        if not -1.0 <= self.polarity <= 1.0 or not 0.0 <= self.subjectivity <= 1.0:
            raise ValidationError("sentiment values out of range")
        if self.matched_terms == 0 and (self.polarity != 0.0 or self.subjectivity != 0.0):
            raise ValidationError("unmatched document must score (0, 0)")

    def with_weights(self, weights: ScoreWeights) -> "SentimentScore":
        return SentimentScore(
            polarity=self.polarity,
            subjectivity=self.subjectivity,
            score=combine_score(self.polarity, self.subjectivity, weights),
            matched_terms=self.matched_terms,
        )

    def to_json_obj(self) -> dict:
        return {
            "polarity": float(self.polarity),
            "subjectivity": float(self.subjectivity),
            "score": float(self.score),
            "matched_terms": self.matched_terms,
        }


@dataclass(frozen=True)
class ScoredDocument:
    url: str
    source_id: str
    published_at: dt.datetime
    timestamp_confidence: TimestampConfidence
    text: str
    sentiment: SentimentScore

    def __post_init__(self) -> None:
        if not self.text:
            raise ValidationError("document text is empty")

    def to_json_obj(self) -> dict:
        from .timeutil import format_rfc3339

        return {
            "url": self.url,
            "source_id": self.source_id,
            "published_at": format_rfc3339(self.published_at),
            "timestamp_confidence": self.timestamp_confidence.value,
            "text": self.text,
            "sentiment": self.sentiment.to_json_obj(),
        }


def tokenize(text: str) -> list[str]:
    """Lowercase tokens split on non-alphanumeric runs, apostrophes kept."""
    return _TOKEN_RE.findall(text.lower())


def _is_negator(token: str) -> bool:
    return token in NEGATORS or token.endswith("n't")


def score_document(text: str, lexicon: Mapping[str, LexiconEntry]) -> SentimentScore:
    """Score raw text against the lexicon. ``score`` stays zero-weighted;
    apply request weights afterwards with :meth:`SentimentScore.with_weights`.
    """
    if not lexicon:
        raise EmptyLexicon("scoring needs a non-empty lexicon")
    tokens = tokenize(text)
    total_p = 0.0
    total_s = 0.0
    matched = 0
    for i, token in enumerate(tokens):
        entry = lexicon.get(token)
        if entry is None or entry.intensity != 1.0:
            continue
        p = entry.polarity
        s = entry.subjectivity
        if any(_is_negator(t) for t in tokens[max(0, i - NEGATION_LOOKBACK) : i]):
            p = p * NEGATION_FACTOR
        if i > 0:
            prev = lexicon.get(tokens[i - 1])
            if prev is not None and prev.intensity != 1.0:
                p = p * prev.intensity
                s = s * prev.intensity
        total_p += min(1.0, max(-1.0, p))
        total_s += min(1.0, max(0.0, s))
        matched += 1
    if matched == 0:
        return SentimentScore(0.0, 0.0, 0.0, 0)
    return SentimentScore(
        polarity=min(1.0, max(-1.0, total_p / matched)),
        subjectivity=min(1.0, max(0.0, total_s / matched)),
        score=0.0,
        matched_terms=matched,
    )


def combine_score(polarity: float, subjectivity: float, weights: ScoreWeights) -> float:
    # Literal multiply-then-add, left to right. Evaluation order is part
    # of the contract: results are bit-for-bit reproducible.
    return weights.w_p * polarity + weights.w_s * subjectivity


def classify(
    score: float, thresholds: tuple[float, float] = DEFAULT_THRESHOLDS
) -> Sentiment:
    neg_max, pos_min = thresholds
    if neg_max >= pos_min:
        raise BadThresholds(f"neg_max {neg_max} must be below pos_min {pos_min}")
    if score < neg_max:
        return Sentiment.Negative
    if score > pos_min:
        return Sentiment.Positive
    return Sentiment.Neutral


def top_terms(
    docs: Iterable[ScoredDocument],
    stopwords: frozenset[str] | set[str],
    k: int,
    exclude: Iterable[str] = (),
) -> list[tuple[str, int]]:
    """Most frequent non-stopword tokens, ties broken alphabetically.

    ``exclude`` removes the request keyword's own tokens so the list
    carries associations, not the query echoed back.
    """
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    banned = set(stopwords) | {t.lower() for t in exclude}
    counts: Counter[str] = Counter()
    for doc in docs:
        for token in tokenize(doc.text):
            if token not in banned:
                counts[token] += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


def aggregate_daily(
    docs: Sequence[ScoredDocument],
    day: dt.date,
    source_weights: Mapping[str, float],
    *,
    keyword: str,
    stopwords: frozenset[str] | set[str] | None = None,
    top_k: int = 10,
    thresholds: tuple[float, float] = DEFAULT_THRESHOLDS,
    generated_at: dt.datetime | None = None,
) -> DailyRecord:
    """Fold one day's scored documents into the archive record."""
    for doc in docs:
        if doc.published_at.date() != day:
            raise DayMismatch(
                f"document {doc.url} dated {doc.published_at.date()}, expected {day}"
            )
    if stopwords is None:
        stopwords = default_stopwords()

    by_source: dict[str, list[ScoredDocument]] = {}
    for doc in docs:
        by_source.setdefault(doc.source_id, []).append(doc)

    per_source: dict[str, SourceStats] = {}
    for sid, group in sorted(by_source.items()):
        n = len(group)
        counts = Counter(classify(d.sentiment.score, thresholds) for d in group)
        per_source[sid] = SourceStats(
            doc_count=n,
            polarity=sum(d.sentiment.polarity for d in group) / n,
            subjectivity=sum(d.sentiment.subjectivity for d in group) / n,
            score=sum(d.sentiment.score for d in group) / n,
            class_counts=ClassCounts(
                positive=counts.get(Sentiment.Positive, 0),
                neutral=counts.get(Sentiment.Neutral, 0),
                negative=counts.get(Sentiment.Negative, 0),
            ),
        )

    present = {sid: source_weights.get(sid, 0.0) for sid in per_source}
    total = sum(present.values())
    if per_source and total == 0:
        present = {sid: 1.0 for sid in per_source}
        total = float(len(per_source))
    combined = CombinedStats()
    if per_source:
        acc_p = acc_s = acc_sc = 0.0
        for sid in sorted(per_source):
            share = present[sid] / total
            acc_p += share * per_source[sid].polarity
            acc_s += share * per_source[sid].subjectivity
            acc_sc += share * per_source[sid].score
        combined = CombinedStats(acc_p, acc_s, acc_sc)

    terms = top_terms(docs, stopwords, top_k, exclude=tokenize(keyword)) if docs else []
    return DailyRecord(
        keyword=keyword,
        day=day,
        per_source=per_source,
        combined=combined,
        top_terms=tuple(terms),
        generated_at=generated_at if generated_at is not None else utc_now(),
    )


# --- lexicon and stopword loading ------------------------------------------


def parse_lexicon(lines: Iterable[str], origin: str = "<lexicon>") -> dict[str, LexiconEntry]:
    entries: dict[str, LexiconEntry] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ValidationError(f"{origin}:{lineno}: expected 4 tab-separated fields")
        token, pol, subj, inten = parts
        try:
            entry = LexiconEntry(token, float(pol), float(subj), float(inten))
        except ValueError as exc:
            raise ValidationError(f"{origin}:{lineno}: {exc}") from None
        entries[entry.token] = entry
    if not entries:
        raise EmptyLexicon(f"{origin}: no lexicon entries")
    return entries


def load_lexicon(path: str | Path) -> dict[str, LexiconEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh, origin=str(path))


def load_stopwords(path: str | Path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(
            line.strip().lower()
            for line in fh
            if line.strip() and not line.lstrip().startswith("#")
        )


@lru_cache(maxsize=1)
def default_lexicon() -> dict[str, LexiconEntry]:
    text = resources.files("oracleloom").joinpath("data/lexicon.tsv").read_text("utf-8")
    return parse_lexicon(text.splitlines(), origin="data/lexicon.tsv")


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    text = resources.files("oracleloom").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )
