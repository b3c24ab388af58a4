"""Uniform completion interface over cloud, edge-local, and stub providers.

Every provider is a config entry, never a compiled-in special case. The
stub provider answers offline and is a pure function of the request, which
is what lets the whole report path run deterministically in tests.
"""

from __future__ import annotations

import math
import random
import re
import statistics
import threading
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Mapping, Sequence

import httpx

from .errors import (
    BudgetExceeded,
    LiveDisabled,
    ProviderUnknown,
    Timeout,
    UpstreamError,
    ValidationError,
)
from . import prompts

MAX_RETRIES = 3
BACKOFF_BASE_MS = 500.0
BACKOFF_FACTOR = 2.0
DEFAULT_TIMEOUT_S = 60.0
STUB_LATENCY_MS = 1


class ProviderKind(Enum):
    Cloud = "cloud"
    Edge = "edge"
    Stub = "stub"


@dataclass(frozen=True)
class ProviderConfig:
    provider_id: str
    kind: ProviderKind
    endpoint: str | None = None
    model: str | None = None
    credential_env: str | None = None
    timeout_s: float = DEFAULT_TIMEOUT_S

    def __post_init__(self) -> None:
        if self.kind is not ProviderKind.Stub and not self.endpoint:
            raise ValidationError(f"{self.provider_id}: {self.kind.value} provider needs endpoint")
        if self.timeout_s <= 0:
            raise ValidationError("timeout_s must be positive")

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "provider_id": self.provider_id,
            "kind": self.kind.value,
            "endpoint": self.endpoint,
            "model": self.model,
            "credential_env": self.credential_env,
            "timeout_s": self.timeout_s,
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any]) -> "ProviderConfig":
        return cls(
            provider_id=obj["provider_id"],
            kind=ProviderKind(obj["kind"]),
            endpoint=obj.get("endpoint"),
            model=obj.get("model"),
            credential_env=obj.get("credential_env"),
            timeout_s=obj.get("timeout_s", DEFAULT_TIMEOUT_S),
        )


@dataclass(frozen=True)
class CompletionRequest:
    system_prompt: str
    user_prompt: str
    max_output_tokens: int = 2048
    temperature: float = 0.0
    provider_id: str = "stub"

    def __post_init__(self) -> None:
        if not self.system_prompt.strip() or not self.user_prompt.strip():
            raise ValidationError("prompts must be non-empty")
        if self.max_output_tokens < 1:
            raise ValidationError("max_output_tokens must be >= 1")
        if self.temperature < 0:
            raise ValidationError("temperature must be >= 0")


@dataclass(frozen=True)
class CompletionResponse:
    text: str
    tokens_in: int
    tokens_out: int
    latency_ms: int
    provider_id: str
    attempt: int = 1

    def __post_init__(self) -> None:
        if self.latency_ms < 0 or self.tokens_out < 0 or self.tokens_in < 0:
            raise ValidationError("counts must be non-negative")


@dataclass(frozen=True)
class BenchStats:
    provider_id: str
    trials: int
    cold_start_ms: int
    warm_mean_ms: float
    warm_stddev_ms: float
    token_counts: tuple[int, ...]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "provider_id": self.provider_id,
            "trials": self.trials,
            "cold_start_ms": self.cold_start_ms,
            "warm_mean_ms": self.warm_mean_ms,
            "warm_stddev_ms": self.warm_stddev_ms,
            "token_counts": list(self.token_counts),
        }


def estimate_request_tokens(request: CompletionRequest) -> int:
    """Whitespace-token estimate of the whole call: both prompts plus the
    output ceiling. Used to reserve budget before any network traffic."""
    return (
        len(request.system_prompt.split())
        + len(request.user_prompt.split())
        + request.max_output_tokens
    )


# --- the offline stub ------------------------------------------------------

_KEYWORD_RE = re.compile(r"^KEYWORD: (.*)$", re.MULTILINE)
_TERMS_RE = re.compile(r"^TOP TERMS: (.*)$", re.MULTILINE)
_CHART_RE = re.compile(r"^CHART DATA JSON:\n(.*)$", re.MULTILINE)
_URL_RE = re.compile(r"https?://[^\s|]+")
_DOCS_BLOCK_RE = re.compile(r"^DOCUMENTS:\n(.*?)(?:\n\n|\Z)", re.MULTILINE | re.DOTALL)


def _stub_section(sid: str, keyword: str, urls: Sequence[str], terms: str, chart: str) -> str:
    if sid == "chart_data":
        return chart or "{}"
    if sid == "associated_words":
        return terms if terms else prompts.NO_DATA_TEXT
    if not urls:
        return prompts.NO_DATA_TEXT
    # quoting every excerpt would drown the prose; the first few match the
    # structural citations
    cited = " ".join(urls[:5])
    lead = {
        "introduction": f"This report reviews public discussion of {keyword} across the collected sources.",
        "summary": f"Across the reviewed documents, opinions on {keyword} span praise and complaints; the balance is quantified in the chart data.",
        "cause_analysis": f"The drivers behind the current sentiment toward {keyword} are visible in the cited coverage.",
        "risk_assessment": f"Sustained negative coverage of {keyword} would present reputational and operational risk.",
        "policy_suggestions": f"Address the recurring complaints about {keyword} surfaced in the cited documents.",
        "conclusion": f"Overall sentiment on {keyword} follows the pattern summarized above and in the chart data.",
    }.get(sid, f"Findings on {keyword}.")
    return f"{lead} Sources: {cited}"


def complete_stub(request: CompletionRequest) -> CompletionResponse:
    """Deterministic offline completion: answers exactly the sections the
    prompt's OUTPUT FORMAT block demands, grounded in the document lines
    quoted in the prompt."""
    prompt = request.user_prompt
    required = prompts.required_sections(prompt)
    keyword_match = _KEYWORD_RE.search(prompt)
    keyword = keyword_match.group(1) if keyword_match else "the topic"
    docs_match = _DOCS_BLOCK_RE.search(prompt)
    urls = _URL_RE.findall(docs_match.group(1)) if docs_match else []
    terms_match = _TERMS_RE.search(prompt)
    terms = terms_match.group(1) if terms_match else ""
    chart_match = _CHART_RE.search(prompt)
    chart = chart_match.group(1) if chart_match else ""

    if not required:
        text = "OK."
    else:
        blocks = []
        for sid in required:
            blocks.append(
                prompts.SECTION_OPEN.format(sid=sid)
                + "\n"
                + _stub_section(sid, keyword, urls, terms, chart)
                + "\n"
                + prompts.SECTION_CLOSE
            )
        text = "\n".join(blocks)
    return CompletionResponse(
        text=text,
        tokens_in=len(request.system_prompt.split()) + len(prompt.split()),
        tokens_out=len(text.split()),
        latency_ms=STUB_LATENCY_MS,
        provider_id=request.provider_id,
        attempt=1,
    )


# --- the gateway -----------------------------------------------------------

Handler = Callable[[CompletionRequest], CompletionResponse]


def default_providers() -> dict[str, ProviderConfig]:
    return {"stub": ProviderConfig(provider_id="stub", kind=ProviderKind.Stub)}


class Gateway:
    """Dispatches completion calls, meters token spend, retries transient
    upstream failures with jittered exponential backoff.

    sleep, rng, clock, getenv, and client are injectable so retry timing
    and fault paths are testable without wall-clock waits. handlers maps a
    provider_id to a callable that replaces its transport; the fault
    injection tests use it, and the stub runs through it as well.
    """

    def __init__(
        self,
        providers: Mapping[str, ProviderConfig] | None = None,
        *,
        token_budget: int | None = None,
        handlers: Mapping[str, Handler] | None = None,
        sleep: Callable[[float], None] = time.sleep,
        rng: random.Random | None = None,
        clock: Callable[[], float] = time.monotonic,
        getenv: Callable[[str], str | None] | None = None,
        client: httpx.Client | None = None,
    ) -> None:
        self.providers = dict(providers) if providers is not None else default_providers()
        self._handlers = dict(handlers or {})
        self._sleep = sleep
        self._rng = rng if rng is not None else random.Random()
        self._clock = clock
        self._getenv = getenv
        self._client = client
        self._budget_lock = threading.Lock()
        self._remaining = token_budget

    # budget ----------------------------------------------------------------

    def spend_budget(self, tokens: int) -> float:
        """Reserve tokens; returns what is left (inf when unmetered)."""
        if tokens < 0:
            raise ValidationError("tokens must be >= 0")
        with self._budget_lock:
            if self._remaining is None:
                return math.inf
            if tokens > self._remaining:
                raise BudgetExceeded(
                    f"request needs ~{tokens} tokens, {self._remaining} left"
                )
            self._remaining -= tokens
            return self._remaining

    @property
    def remaining_budget(self) -> float:
        with self._budget_lock:
            return math.inf if self._remaining is None else self._remaining

    # completion ------------------------------------------------------------

    def complete(self, request: CompletionRequest) -> CompletionResponse:
        config = self.providers.get(request.provider_id)
        if config is None:
            raise ProviderUnknown(f"no provider registered as {request.provider_id!r}")
        self.spend_budget(estimate_request_tokens(request))

        last: UpstreamError | None = None
        for attempt in range(1, MAX_RETRIES + 2):
            try:
                response = self._invoke(config, request)
            except UpstreamError as exc:
                last = exc
                if attempt > MAX_RETRIES:
                    break
                # full jitter: anywhere up to the doubling cap
                cap_ms = BACKOFF_BASE_MS * BACKOFF_FACTOR ** (attempt - 1)
                self._sleep(self._rng.uniform(0.0, cap_ms) / 1000.0)
                continue
            return CompletionResponse(
                text=response.text,
                tokens_in=response.tokens_in,
                tokens_out=response.tokens_out,
                latency_ms=response.latency_ms,
                provider_id=request.provider_id,
                attempt=attempt,
            )
        assert last is not None
        raise UpstreamError(
            f"{request.provider_id}: giving up after {MAX_RETRIES + 1} attempts: {last}",
            attempts=MAX_RETRIES + 1,
            last_status=last.last_status,
        )

    def _invoke(self, config: ProviderConfig, request: CompletionRequest) -> CompletionResponse:
        handler = self._handlers.get(config.provider_id)
        if handler is not None:
            return handler(request)
        if config.kind is ProviderKind.Stub:
            return complete_stub(request)
        return self._invoke_http(config, request)

    def _invoke_http(self, config: ProviderConfig, request: CompletionRequest) -> CompletionResponse:
        import os

        headers = {}
        if config.credential_env:
            get = self._getenv if self._getenv is not None else os.environ.get
            token = get(config.credential_env)
            if not token:
                raise LiveDisabled(
                    f"{config.provider_id}: set ${config.credential_env} to enable this provider"
                )
            headers["Authorization"] = f"Bearer {token}"
        payload = {
            "model": config.model,
            "system": request.system_prompt,
            "prompt": request.user_prompt,
            "max_tokens": request.max_output_tokens,
            "temperature": request.temperature,
        }
        owned = self._client is None
        client = self._client or httpx.Client(timeout=config.timeout_s)
        started = self._clock()
        try:
            try:
                resp = client.post(config.endpoint, json=payload, headers=headers)  # type: ignore[arg-type]
            except httpx.TimeoutException as exc:
                raise Timeout(f"{config.provider_id}: no reply in {config.timeout_s}s") from exc
            except httpx.HTTPError as exc:
                raise UpstreamError(f"{config.provider_id}: {exc}") from exc
            if resp.status_code != 200:
                raise UpstreamError(
                    f"{config.provider_id}: status {resp.status_code}",
                    last_status=resp.status_code,
                )
            body = resp.json()
            latency_ms = max(0, round((self._clock() - started) * 1000))
            return CompletionResponse(
                text=body["text"],
                tokens_in=int(body.get("tokens_in", 0)),
                tokens_out=int(body.get("tokens_out", len(str(body["text"]).split()))),
                latency_ms=latency_ms,
                provider_id=config.provider_id,
            )
        finally:
            if owned:
                client.close()

    # benchmarking ----------------------------------------------------------

    def bench(self, provider_id: str, prompt: str, trials: int) -> BenchStats:
        """Sequential latency probe: first trial is the cold start, the
        rest are warm."""
        if trials < 2:
            raise ValidationError("bench needs at least 2 trials (1 cold + 1 warm)")
        request = CompletionRequest(
            system_prompt="You are a latency benchmark probe. Answer briefly.",
            user_prompt=prompt,
            provider_id=provider_id,
        )
        responses = [self.complete(request) for _ in range(trials)]
        warm = [r.latency_ms for r in responses[1:]]
        return BenchStats(
            provider_id=provider_id,
            trials=trials,
            cold_start_ms=responses[0].latency_ms,
            warm_mean_ms=statistics.fmean(warm),
            warm_stddev_ms=statistics.pstdev(warm),
            token_counts=tuple(r.tokens_out for r in responses),
        )
