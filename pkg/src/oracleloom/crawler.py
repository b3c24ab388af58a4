"""Source adapters: fixture replay and thin live HTTP shells.

Replay mode is the default everywhere. A fixture is a UTF-8 file of one
JSON document per line, which makes the whole ingestion path runnable
offline and byte-for-byte reproducible. Live mode is the same contract
over HTTP and stays disabled until credentials appear in the environment.
"""

from __future__ import annotations

import datetime as dt
import html
import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Iterable, Mapping, Sequence
from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit

import httpx

from .errors import (
    FixtureMissing,
    LiveDisabled,
    NoData,
    NotFound,
    UpstreamError,
    ValidationError,
)
from .model import DateWindow
from .sentiment import TimestampConfidence
from .timeutil import format_rfc3339, parse_rfc3339

DEFAULT_REQUEST_INTERVAL_MS = 1000
DEFAULT_MAX_DOCS_PER_DAY = 50

PACKAGED_SOURCES = (
    "bing_news",
    "google_news",
    "google_search",
    "twitter",
    "yahoo_hot",
)


class AdapterMode(Enum):
    Replay = "replay"
    Live = "live"


@dataclass(frozen=True)
class RawDocument:
    url: str
    source_id: str
    title: str
    body: str
    fetched_at: dt.datetime
    published_at: dt.datetime | None = None

    def __post_init__(self) -> None:
        if not re.match(r"^https?://", self.url):
            raise ValidationError(f"document url must be absolute: {self.url!r}")
        if not self.title and not self.body:
            raise ValidationError(f"document {self.url} has neither title nor body")

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "url": self.url,
            "source_id": self.source_id,
            "title": self.title,
            "body": self.body,
            "fetched_at": format_rfc3339(self.fetched_at),
            "published_at": (
                format_rfc3339(self.published_at) if self.published_at else None
            ),
        }
        return obj

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "RawDocument":
        published = obj.get("published_at")
        return cls(
            url=obj["url"],
            source_id=obj["source_id"],
            title=obj.get("title", ""),
            body=obj.get("body", ""),
            fetched_at=parse_rfc3339(obj["fetched_at"]),
            published_at=parse_rfc3339(published) if published else None,
        )


@dataclass(frozen=True)
class SourceAdapterConfig:
    source_id: str
    mode: AdapterMode = AdapterMode.Replay
    fixture_path: str | None = None
    endpoint: str | None = None
    credential_env: str | None = None
    request_interval_ms: int = DEFAULT_REQUEST_INTERVAL_MS
    max_docs_per_day: int = DEFAULT_MAX_DOCS_PER_DAY

    def __post_init__(self) -> None:
        if self.request_interval_ms < 100:
            raise ValidationError("request_interval_ms must be >= 100")
        if self.max_docs_per_day < 1:
            raise ValidationError("max_docs_per_day must be >= 1")
        if self.mode is AdapterMode.Replay and not self.fixture_path:
            raise ValidationError(f"{self.source_id}: replay mode needs fixture_path")
        if self.mode is AdapterMode.Live and not self.endpoint:
            raise ValidationError(f"{self.source_id}: live mode needs endpoint")

    def to_json_obj(self) -> dict:
        obj: dict = {
            "source_id": self.source_id,
            "mode": self.mode.value,
            "request_interval_ms": self.request_interval_ms,
            "max_docs_per_day": self.max_docs_per_day,
        }
        if self.fixture_path is not None:
            obj["fixture_path"] = str(self.fixture_path)
        if self.endpoint is not None:
            obj["endpoint"] = self.endpoint
        if self.credential_env is not None:
            obj["credential_env"] = self.credential_env
        return obj

    @classmethod
    def from_json_obj(cls, obj) -> "SourceAdapterConfig":
        return cls(
            source_id=obj["source_id"],
            mode=AdapterMode(obj.get("mode", "replay")),
            fixture_path=obj.get("fixture_path"),
            endpoint=obj.get("endpoint"),
            credential_env=obj.get("credential_env"),
            request_interval_ms=int(obj.get("request_interval_ms", DEFAULT_REQUEST_INTERVAL_MS)),
            max_docs_per_day=int(obj.get("max_docs_per_day", DEFAULT_MAX_DOCS_PER_DAY)),
        )


def assign_timestamp(doc: RawDocument) -> tuple[dt.datetime, TimestampConfidence]:
    """Prefer the publication time; fall back to when we fetched it."""
    if doc.published_at is not None:
        return doc.published_at, TimestampConfidence.Published
    return doc.fetched_at, TimestampConfidence.Fetched


def normalize_url(url: str) -> str:
    """Lowercase scheme/host, drop fragment and utm_* tracking params."""
    parts = urlsplit(url)
    query = [
        (k, v)
        for k, v in parse_qsl(parts.query, keep_blank_values=True)
        if not k.lower().startswith("utm_")
    ]
    return urlunsplit(
        (
            parts.scheme.lower(),
            parts.netloc.lower(),
            parts.path,
            urlencode(query),
            "",
        )
    )


def dedupe(docs: Sequence[RawDocument]) -> list[RawDocument]:
    """Drop URL duplicates, keeping the earliest-published copy at the
    position where the URL first appeared."""
    slots: dict[str, int] = {}
    out: list[RawDocument] = []
    for doc in docs:
        key = normalize_url(doc.url)
        if key not in slots:
            slots[key] = len(out)
            out.append(doc)
        else:
            idx = slots[key]
            if assign_timestamp(doc)[0] < assign_timestamp(out[idx])[0]:
                out[idx] = doc
    return out


def _read_fixture(path: str | Path) -> list[RawDocument]:
    p = Path(path)
    if not p.is_file():
        raise FixtureMissing(f"fixture not found: {p}")
    docs = []
    with open(p, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                docs.append(RawDocument.from_json_obj(json.loads(line)))
            except (json.JSONDecodeError, KeyError) as exc:
                raise ValidationError(f"{p}:{lineno}: bad fixture line: {exc}") from None
    return docs


def _matches(doc: RawDocument, needles: Sequence[str]) -> bool:
    haystack = f"{doc.title}\n{doc.body}".lower()
    return any(n in haystack for n in needles)


def _filter_sort_cap(
    docs: Iterable[RawDocument],
    needles: Sequence[str],
    window: DateWindow,
    max_docs_per_day: int,
) -> list[RawDocument]:
    kept = [
        d
        for d in docs
        if _matches(d, needles) and assign_timestamp(d)[0].date() in window
    ]
    kept.sort(key=lambda d: (assign_timestamp(d)[0], d.url))
    out: list[RawDocument] = []
    per_day: dict[dt.date, int] = {}
    for doc in kept:
        day = assign_timestamp(doc)[0].date()
        if per_day.get(day, 0) >= max_docs_per_day:
            continue
        per_day[day] = per_day.get(day, 0) + 1
        out.append(doc)
    return out


def fetch(
    config: SourceAdapterConfig,
    keyword: str,
    window: DateWindow,
    synonyms: Sequence[str] = (),
    *,
    getenv: Callable[[str], str | None] | None = None,
    client: httpx.Client | None = None,
    sleep: Callable[[float], None] = time.sleep,
) -> list[RawDocument]:
    """Gather keyword-matched documents from one source.

    Output is filtered to the window, ordered by (timestamp, url), and
    capped per calendar day. Replay mode never touches the network.
    """
    needles = [keyword.lower()] + [s.lower() for s in synonyms if s]
    if config.mode is AdapterMode.Replay:
        docs = _read_fixture(config.fixture_path)  # type: ignore[arg-type]
    else:
        docs = _live_search(config, keyword, window, getenv=getenv, client=client, sleep=sleep)
    docs = [d for d in docs if d.source_id == config.source_id]
    return _filter_sort_cap(docs, needles, window, config.max_docs_per_day)


def fetch_many(
    configs: Sequence[SourceAdapterConfig],
    keyword: str,
    window: DateWindow,
    synonyms: Sequence[str] = (),
    *,
    missing_ok: bool = False,
    **kw: Any,
) -> dict[str, list[RawDocument]]:
    """Run the per-source fetches concurrently.

    With missing_ok a source whose fixture is absent contributes an empty
    list instead of failing the whole batch.
    """
    if not configs:
        return {}

    def one(config: SourceAdapterConfig) -> list[RawDocument]:
        try:
            return fetch(config, keyword, window, synonyms, **kw)
        except FixtureMissing:
            if missing_ok:
                return []
            raise

    with ThreadPoolExecutor(max_workers=len(configs)) as pool:
        results = list(pool.map(one, configs))
    return {c.source_id: docs for c, docs in zip(configs, results)}


def default_adapter_configs() -> list[SourceAdapterConfig]:
    """Replay configs over the fixture corpus bundled with the package."""
    from importlib.resources import files

    root = files("oracleloom").joinpath("data", "fixtures")
    return [
        SourceAdapterConfig(
            source_id=sid,
            mode=AdapterMode.Replay,
            fixture_path=str(root.joinpath(f"{sid}.jsonl")),
        )
        for sid in PACKAGED_SOURCES
    ]


# --- live adapters ---------------------------------------------------------


def _credential(config: SourceAdapterConfig, getenv) -> str:
    import os

    get = getenv if getenv is not None else os.environ.get
    token = get(config.credential_env) if config.credential_env else None
    if not token:
        raise LiveDisabled(
            f"{config.source_id}: live mode needs credentials in "
            f"${config.credential_env or '<unset>'}"
        )
    return token


def _live_search(
    config: SourceAdapterConfig,
    keyword: str,
    window: DateWindow,
    *,
    getenv,
    client: httpx.Client | None,
    sleep: Callable[[float], None],
) -> list[RawDocument]:
    token = _credential(config, getenv)
    owned = client is None
    cl = client or httpx.Client(timeout=10.0)
    try:
        try:
            resp = cl.get(
                config.endpoint,  # type: ignore[arg-type]
                params={
                    "q": keyword,
                    "from": window.start.isoformat(),
                    "to": window.end.isoformat(),
                },
                headers={"Authorization": f"Bearer {token}"},
            )
        except httpx.HTTPError as exc:
            raise UpstreamError(f"{config.source_id}: {exc}", attempts=1) from exc
        if resp.status_code != 200:
            raise UpstreamError(
                f"{config.source_id}: search returned {resp.status_code}",
                attempts=1,
                last_status=resp.status_code,
            )
        sleep(config.request_interval_ms / 1000.0)
        return [RawDocument.from_json_obj(item) for item in resp.json()]
    finally:
        if owned:
            cl.close()


# --- single-page retrieval -------------------------------------------------

_TAG_DROP_RE = re.compile(r"<(script|style)\b.*?</\1\s*>", re.IGNORECASE | re.DOTALL)
_TAG_RE = re.compile(r"<[^>]+>")
_TITLE_RE = re.compile(r"<title[^>]*>(.*?)</title>", re.IGNORECASE | re.DOTALL)


def strip_markup(markup: str) -> tuple[str, str]:
    """Extract (title, visible text): tags out, entities decoded,
    whitespace collapsed."""
    title_match = _TITLE_RE.search(markup)
    title = ""
    if title_match:
        title = " ".join(html.unescape(_TAG_RE.sub(" ", title_match.group(1))).split())
    text = _TAG_DROP_RE.sub(" ", markup)
    text = _TAG_RE.sub(" ", text)
    text = html.unescape(text)
    return title, " ".join(text.split())


def fetch_url(
    url: str,
    configs: Sequence[SourceAdapterConfig],
    *,
    getenv: Callable[[str], str | None] | None = None,
    client: httpx.Client | None = None,
) -> RawDocument:
    """Retrieve one page: replay fixtures first, live GET as a fallback
    when any live source is configured."""
    if not re.match(r"^https?://", url):
        raise ValidationError(f"url must be absolute: {url!r}")
    target = normalize_url(url)
    live_config: SourceAdapterConfig | None = None
    for config in configs:
        if config.mode is AdapterMode.Replay:
            try:
                docs = _read_fixture(config.fixture_path)  # type: ignore[arg-type]
            except FixtureMissing:
                continue
            for doc in docs:
                if normalize_url(doc.url) == target:
                    title, body = strip_markup(doc.body) if "<" in doc.body else (
                        doc.title,
                        doc.body,
                    )
                    if not (title or doc.title or body.strip()):
                        raise NoData(f"no extractable text at {url}")
                    return RawDocument(
                        url=doc.url,
                        source_id=doc.source_id,
                        title=title or doc.title,
                        body=body,
                        fetched_at=doc.fetched_at,
                        published_at=doc.published_at,
                    )
        elif live_config is None:
            live_config = config
    if live_config is not None:
        return _live_page(url, live_config, getenv=getenv, client=client)
    raise NotFound(f"url not in any fixture: {url}")


def _live_page(
    url: str,
    config: SourceAdapterConfig,
    *,
    getenv,
    client: httpx.Client | None,
) -> RawDocument:
    _credential(config, getenv)
    owned = client is None
    cl = client or httpx.Client(timeout=10.0, follow_redirects=True)
    try:
        try:
            resp = cl.get(url)
        except httpx.HTTPError as exc:
            raise UpstreamError(f"fetch {url}: {exc}", attempts=1) from exc
        if resp.status_code == 404:
            raise NotFound(url)
        if resp.status_code != 200:
            raise UpstreamError(
                f"fetch {url}: status {resp.status_code}",
                attempts=1,
                last_status=resp.status_code,
            )
        title, body = strip_markup(resp.text)
        if not (title or body.strip()):
            raise NoData(f"no extractable text at {url}")
        now = dt.datetime.now(dt.timezone.utc).replace(microsecond=0)
        return RawDocument(
            url=url,
            source_id=config.source_id,
            title=title,
            body=body or title,
            fetched_at=now,
            published_at=None,
        )
    finally:
        if owned:
            cl.close()
