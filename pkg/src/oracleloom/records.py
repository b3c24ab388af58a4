"""The daily sentiment archive: one canonical JSON file per keyword per day.

Layout is ``records/<slug>/<YYYY-MM-DD>.json`` under the store root, where
slug is the case-folded keyword with non-alphanumeric runs collapsed to
``-``. Files are human-inspectable and diffable; writes go through a
temp-file rename so readers never see a torn record.
"""

from __future__ import annotations

import datetime as dt
import os
import re
import tempfile
import threading
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Mapping

from .canonical import dumps_canonical, loads
from .errors import InvalidRecord, NoData, NonContiguous, StorageFailure
from .forecasting import Series
from .timeutil import format_rfc3339, parse_rfc3339, utc_now

SCHEMA_VERSION = 1

# Weighted means can drift past their bounds by float dust; anything worse
# means the record was built wrong.
_BOUNDS_SLACK = 1e-9


@dataclass(frozen=True)
class ClassCounts:
    positive: int = 0
    neutral: int = 0
    negative: int = 0

    @property
    def total(self) -> int:
        return self.positive + self.neutral + self.negative

    def to_json_obj(self) -> dict[str, int]:
        return {
            "positive": self.positive,
            "neutral": self.neutral,
            "negative": self.negative,
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "ClassCounts":
        return cls(int(obj["positive"]), int(obj["neutral"]), int(obj["negative"]))


@dataclass(frozen=True)
class SourceStats:
    doc_count: int
    polarity: float
    subjectivity: float
    score: float
    class_counts: ClassCounts

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "doc_count": self.doc_count,
            "polarity": float(self.polarity),
            "subjectivity": float(self.subjectivity),
            "score": float(self.score),
            "class_counts": self.class_counts.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "SourceStats":
        return cls(
            doc_count=int(obj["doc_count"]),
            polarity=float(obj["polarity"]),
            subjectivity=float(obj["subjectivity"]),
            score=float(obj["score"]),
            class_counts=ClassCounts.from_json_obj(obj["class_counts"]),
        )


@dataclass(frozen=True)
class CombinedStats:
    polarity: float = 0.0
    subjectivity: float = 0.0
    score: float = 0.0

    def to_json_obj(self) -> dict[str, float]:
        return {
            "polarity": float(self.polarity),
            "subjectivity": float(self.subjectivity),
            "score": float(self.score),
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "CombinedStats":
        return cls(float(obj["polarity"]), float(obj["subjectivity"]), float(obj["score"]))


@dataclass(frozen=True)
class DailyRecord:
    keyword: str
    day: dt.date
    per_source: Mapping[str, SourceStats]
    combined: CombinedStats
    top_terms: tuple[tuple[str, int], ...] = ()
    generated_at: dt.datetime = field(default_factory=utc_now)
    schema_version: int = SCHEMA_VERSION
    # In-memory marker for carry-forward fills; never serialized.
    synthetic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "per_source", dict(self.per_source))
        object.__setattr__(
            self, "top_terms", tuple((str(t), int(f)) for t, f in self.top_terms)
        )
        if self.schema_version != SCHEMA_VERSION:
            raise InvalidRecord(f"unsupported schema_version {self.schema_version}")
        for sid, stats in self.per_source.items():
            if stats.class_counts.total != stats.doc_count:
                raise InvalidRecord(
                    f"source {sid!r}: class counts {stats.class_counts.total} "
                    f"!= doc_count {stats.doc_count}"
                )
        contributing = [s for s in self.per_source.values() if s.doc_count > 0]
        if contributing:
            for attr in ("polarity", "subjectivity", "score"):
                vals = [getattr(s, attr) for s in contributing]
                got = getattr(self.combined, attr)
                if got < min(vals) - _BOUNDS_SLACK or got > max(vals) + _BOUNDS_SLACK:
                    raise InvalidRecord(
                        f"combined {attr} {got} outside per-source bounds "
                        f"[{min(vals)}, {max(vals)}]"
                    )

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "keyword": self.keyword,
            "day": self.day.isoformat(),
            "per_source": {
                sid: stats.to_json_obj() for sid, stats in self.per_source.items()
            },
            "combined": self.combined.to_json_obj(),
            "top_terms": [[term, freq] for term, freq in self.top_terms],
            "generated_at": format_rfc3339(self.generated_at),
            "schema_version": self.schema_version,
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "DailyRecord":
        return cls(
            keyword=obj["keyword"],
            day=dt.date.fromisoformat(obj["day"]),
            per_source={
                sid: SourceStats.from_json_obj(s)
                for sid, s in obj["per_source"].items()
            },
            combined=CombinedStats.from_json_obj(obj["combined"]),
            top_terms=tuple((t, f) for t, f in obj["top_terms"]),
            generated_at=parse_rfc3339(obj["generated_at"]),
            schema_version=int(obj["schema_version"]),
        )


@dataclass(frozen=True)
class RecordKey:
    keyword: str
    day: dt.date

    def __post_init__(self) -> None:
        folded = " ".join(self.keyword.casefold().split())
        object.__setattr__(self, "keyword", folded)


def slugify(keyword: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", keyword.casefold()).strip("-")
    return slug or "keyword"


class Fill(Enum):
    NONE = "none"
    CARRY_FORWARD = "carry_forward"


class RecordStore:
    """Filesystem-backed archive with per-key write serialization."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._locks: dict[tuple[str, str], threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, key: RecordKey) -> threading.Lock:
        handle = (slugify(key.keyword), key.day.isoformat())
        with self._locks_guard:
            return self._locks.setdefault(handle, threading.Lock())

    def _path_for(self, key: RecordKey) -> Path:
        return self.root / "records" / slugify(key.keyword) / f"{key.day.isoformat()}.json"

    def put_record(self, record: DailyRecord) -> RecordKey:
        key = RecordKey(record.keyword, record.day)
        path = self._path_for(key)
        payload = dumps_canonical(record.to_json_obj()).encode("ascii")
        with self._lock_for(key):
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                fd, tmp = tempfile.mkstemp(
                    dir=path.parent, prefix=f".{path.stem}.", suffix=".tmp"
                )
                try:
                    with os.fdopen(fd, "wb") as fh:
                        fh.write(payload)
                    os.replace(tmp, path)
                except BaseException:
                    if os.path.exists(tmp):
                        os.unlink(tmp)
                    raise
            except OSError as exc:
                raise StorageFailure(f"cannot write {path}: {exc}") from exc
        return key

    def get_record(self, keyword: str, day: dt.date) -> DailyRecord | None:
        path = self._path_for(RecordKey(keyword, day))
        try:
            raw = path.read_bytes()
        except FileNotFoundError:
            return None
        except OSError as exc:
            raise StorageFailure(f"cannot read {path}: {exc}") from exc
        try:
            return DailyRecord.from_json_obj(loads(raw))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRecord(f"corrupt record {path}: {exc}") from exc

    def get_range(
        self,
        keyword: str,
        start: dt.date,
        end: dt.date,
        fill: Fill = Fill.NONE,
    ) -> list[DailyRecord]:
        if start > end:
            raise InvalidRecord(f"range reversed: {start} > {end}")
        out: list[DailyRecord] = []
        last_real: DailyRecord | None = None
        day = start
        while day <= end:
            record = self.get_record(keyword, day)
            if record is not None:
                out.append(record)
                last_real = record
            elif fill is Fill.CARRY_FORWARD and last_real is not None:
                out.append(_synthetic_copy(last_real, day))
            day += dt.timedelta(days=1)
        return out

    def keywords(self) -> list[str]:
        """Slugs with at least one stored record, sorted."""
        base = self.root / "records"
        if not base.is_dir():
            return []
        return sorted(p.name for p in base.iterdir() if p.is_dir() and any(p.glob("*.json")))

    def days_for(self, keyword: str) -> list[dt.date]:
        base = self.root / "records" / slugify(keyword)
        if not base.is_dir():
            return []
        days = []
        for p in base.glob("*.json"):
            try:
                days.append(dt.date.fromisoformat(p.stem))
            except ValueError:
                continue
        return sorted(days)


def _synthetic_copy(record: DailyRecord, day: dt.date) -> DailyRecord:
    """Carry-forward stand-in: same sentiment, no documents, flagged."""
    return DailyRecord(
        keyword=record.keyword,
        day=day,
        per_source={},
        combined=record.combined,
        top_terms=record.top_terms,
        generated_at=record.generated_at,
        synthetic=True,
    )


class SeriesField(Enum):
    CombinedScore = "score"
    CombinedPolarity = "polarity"
    CombinedSubjectivity = "subjectivity"


def to_series(
    records: Iterable[DailyRecord], field: SeriesField = SeriesField.CombinedScore
) -> Series:
    """Project one combined statistic from day-contiguous records."""
    ordered = list(records)
    if not ordered:
        raise NoData("no records to project")
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.day != prev.day + dt.timedelta(days=1):
            raise NonContiguous(f"gap between {prev.day} and {cur.day}")
    values = tuple(getattr(r.combined, field.value) for r in ordered)
    return Series(ordered[0].day, values, name=field.name)
