"""HTTP facade over the report pipeline.

Report creation is asynchronous: POST returns 202 with a job id derived
from the request content, a bounded worker pool runs the pipeline, and
progress is observable through a status endpoint and a server-sent event
stream. Completed reports are served from the files persisted in the
data directory, so a restart keeps them retrievable.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import os
import re
import tempfile
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterator, Mapping

from fastapi import FastAPI, Request
from fastapi.responses import Response, StreamingResponse

from .canonical import dumps_canonical_bytes, loads
from .crawler import SourceAdapterConfig, default_adapter_configs
from .errors import (
    AllZero,
    BadDate,
    NoKeyword,
    ValidationError,
)
from .gateway import CompletionRequest, Gateway, ProviderConfig, default_providers
from .model import AnalysisRequest, DateWindow, ReportKind, ScoreWeights, parse_query
from .pipeline import PipelineDeps, Report, generate_report, generate_url_report, write_report_files
from .records import Fill, RecordStore
from .timeutil import format_rfc3339, utc_now

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8787
WORKER_POOL_SIZE = 4

_ID_RE = re.compile(r"^[0-9a-f]{16}$")


class JobState(Enum):
    Queued = "queued"
    Crawling = "crawling"
    Scoring = "scoring"
    Synthesizing = "synthesizing"
    Done = "done"
    Failed = "failed"


# failure is terminal from anywhere, so it shares the top rank
_STATE_RANK = {
    JobState.Queued: 0,
    JobState.Crawling: 1,
    JobState.Scoring: 2,
    JobState.Synthesizing: 3,
    JobState.Done: 4,
    JobState.Failed: 4,
}

TERMINAL_STATES = (JobState.Done, JobState.Failed)


@dataclass(frozen=True)
class JobEvent:
    state: JobState
    at: dt.datetime
    step: int | None = None
    reason: str | None = None

    def to_json_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {"state": self.state.value, "at": format_rfc3339(self.at)}
        if self.step is not None:
            obj["step"] = self.step
        if self.reason is not None:
            obj["reason"] = self.reason
        return obj


class JobStatus:
    """Append-only progress log; transitions may skip states but never
    move backwards, and the synthesis step index never decreases."""

    def __init__(self, report_id: str) -> None:
        self.report_id = report_id
        self.events: list[JobEvent] = []

    @property
    def current(self) -> JobEvent | None:
        return self.events[-1] if self.events else None

    @property
    def state(self) -> JobState:
        return self.events[-1].state if self.events else JobState.Queued

    def advance(self, state: JobState, step: int | None = None, reason: str | None = None) -> JobEvent:
        last = self.current
        if last is not None:
            if _STATE_RANK[state] < _STATE_RANK[last.state]:
                raise ValidationError(
                    f"job state cannot regress: {last.state.value} -> {state.value}"
                )
            if last.state in TERMINAL_STATES:
                raise ValidationError(f"job already terminal: {last.state.value}")
            if (
                state is JobState.Synthesizing
                and last.state is JobState.Synthesizing
                and step is not None
                and last.step is not None
                and step < last.step
            ):
                raise ValidationError(f"synthesis step cannot regress: {last.step} -> {step}")
        event = JobEvent(state=state, at=utc_now(), step=step, reason=reason)
        self.events.append(event)
        return event

    def to_json_obj(self) -> dict[str, Any]:
        current = self.current
        obj: dict[str, Any] = {
            "report_id": self.report_id,
            "state": self.state.value,
            "events": [e.to_json_obj() for e in self.events],
        }
        if current is not None and current.step is not None:
            obj["step"] = current.step
        if current is not None and current.reason is not None:
            obj["reason"] = current.reason
        return obj


class Job:
    def __init__(self, report_id: str, request: AnalysisRequest) -> None:
        self.report_id = report_id
        self.request = request
        self.status = JobStatus(report_id)
        self.report: Report | None = None
        self._cond = threading.Condition()

    def advance(self, state: JobState, step: int | None = None, reason: str | None = None) -> None:
        with self._cond:
            self.status.advance(state, step=step, reason=reason)
            self._cond.notify_all()

    @property
    def terminal(self) -> bool:
        return self.status.state in TERMINAL_STATES

    def wait_for_event(self, index: int, timeout: float) -> bool:
        """Block until event `index` exists or the job ends. True when the
        event is available."""
        deadline = time.monotonic() + timeout
        with self._cond:
            while len(self.status.events) <= index:
                if self.terminal:
                    return False
                remaining = deadline - time.monotonic()
                if remaining <= 0:
                    return False
                self._cond.wait(remaining)
        return True

    def snapshot_events(self) -> list[JobEvent]:
        with self._cond:
            return list(self.status.events)

    def status_json(self) -> dict[str, Any]:
        with self._cond:
            return self.status.to_json_obj()


@dataclass
class ServiceConfig:
    data_dir: Path
    listen_host: str = DEFAULT_HOST
    listen_port: int = DEFAULT_PORT
    adapters: tuple[SourceAdapterConfig, ...] = ()
    providers: Mapping[str, ProviderConfig] = field(default_factory=default_providers)
    provider_id: str = "stub"
    score_weights: ScoreWeights = field(default_factory=ScoreWeights)
    source_weights: Mapping[str, float] = field(default_factory=dict)
    show_urls: bool = True
    token_budget: int | None = None
    chat_llm_fallback: bool = False
    # built console assets to serve under /console; None leaves the
    # API-only surface
    console_dir: Path | None = None

    def __post_init__(self) -> None:
        self.data_dir = Path(self.data_dir)
        if self.console_dir is not None:
            self.console_dir = Path(self.console_dir)
        if not self.adapters:
            self.adapters = tuple(default_adapter_configs())
        providers = dict(self.providers)
        # the stub provider is always reachable so the service never
        # depends on external credentials to come up
        providers.setdefault("stub", default_providers()["stub"])
        self.providers = providers
        if self.provider_id not in self.providers:
            raise ValidationError(f"unknown default provider {self.provider_id!r}")

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any], *, data_dir: Path | None = None) -> "ServiceConfig":
        return cls(
            data_dir=Path(data_dir or obj.get("data_dir", "oracleloom-data")),
            listen_host=obj.get("listen_host", DEFAULT_HOST),
            listen_port=int(obj.get("listen_port", DEFAULT_PORT)),
            adapters=tuple(
                SourceAdapterConfig.from_json_obj(entry) for entry in obj.get("sources", ())
            ),
            providers={
                pid: ProviderConfig.from_json_obj(entry)
                for pid, entry in obj.get("providers", {}).items()
            },
            provider_id=obj.get("provider_id", "stub"),
            score_weights=ScoreWeights.from_json_obj(
                obj.get("score_weights", {"w_p": 1.0, "w_s": 0.0})
            ),
            source_weights=dict(obj.get("source_weights", {})),
            show_urls=bool(obj.get("show_urls", True)),
            token_budget=obj.get("token_budget"),
            chat_llm_fallback=bool(obj.get("chat_llm_fallback", False)),
            console_dir=Path(obj["console_dir"]) if obj.get("console_dir") else None,
        )


def load_service_config(path: str | Path | None = None) -> ServiceConfig:
    """Read the config file named by `path` or ORACLELOOM_CONFIG; without
    either, defaults with a local data directory."""
    if path is None:
        path = os.environ.get("ORACLELOOM_CONFIG")
    if path is None:
        return ServiceConfig(data_dir=Path("oracleloom-data"))
    return ServiceConfig.from_json_obj(loads(Path(path).read_text(encoding="utf-8")))


class JobConflict(Exception):
    def __init__(self, report_id: str) -> None:
        super().__init__(f"job {report_id} is already running")
        self.report_id = report_id


def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


class ServiceState:
    """Shared mutable state behind the endpoints."""

    def __init__(self, config: ServiceConfig, gateway: Gateway | None = None) -> None:
        self.config = config
        config.data_dir.mkdir(parents=True, exist_ok=True)
        self.store = RecordStore(config.data_dir)
        self.gateway = gateway or Gateway(
            providers=config.providers, token_budget=config.token_budget
        )
        self.executor = ThreadPoolExecutor(max_workers=WORKER_POOL_SIZE)
        self.jobs: dict[str, Job] = {}
        self._jobs_lock = threading.Lock()
        self.settings = self._load_settings()

    # --- settings ---------------------------------------------------------

    @property
    def _settings_path(self) -> Path:
        return self.config.data_dir / "settings.json"

    def _default_settings(self) -> dict[str, Any]:
        return {
            "score_weights": self.config.score_weights.to_json_obj(),
            "source_weights": dict(self.config.source_weights),
            "show_urls": self.config.show_urls,
        }

    def _load_settings(self) -> dict[str, Any]:
        settings = self._default_settings()
        if self._settings_path.exists():
            stored = loads(self._settings_path.read_text(encoding="utf-8"))
            settings.update(stored)
        return settings

    def update_settings(self, patch: Mapping[str, Any]) -> dict[str, Any]:
        merged = dict(self.settings)
        weights = dict(merged["score_weights"])
        if "score_weights" in patch:
            weights = dict(patch["score_weights"])
        for key in ("w_p", "w_s"):
            if key in patch:
                weights[key] = patch[key]
        # construction normalizes and rejects the all-zero pair
        merged["score_weights"] = ScoreWeights(
            float(weights["w_p"]), float(weights["w_s"])
        ).to_json_obj()
        if "source_weights" in patch:
            raw = {str(k): float(v) for k, v in patch["source_weights"].items()}
            for sid, w in raw.items():
                if w < 0:
                    raise ValidationError(f"negative weight for source {sid!r}")
            if raw and all(w == 0 for w in raw.values()):
                raise AllZero("every source weight is zero")
            merged["source_weights"] = raw
        if "show_urls" in patch:
            merged["show_urls"] = bool(patch["show_urls"])
        self.settings = merged
        _atomic_write(self._settings_path, dumps_canonical_bytes(merged))
        return merged

    def apply_settings(self, request: AnalysisRequest) -> AnalysisRequest:
        """Fold the stored preferences into a parsed chat request."""
        weights = self.settings["source_weights"] or request.source_weights
        return AnalysisRequest(
            keyword=request.keyword,
            window=request.window,
            kind=request.kind,
            synonyms=request.synonyms,
            url=request.url,
            source_weights=weights,
            score_weights=ScoreWeights.from_json_obj(self.settings["score_weights"]),
            show_urls=bool(self.settings["show_urls"]),
        )

    # --- jobs -------------------------------------------------------------

    def job_id(self, request: AnalysisRequest) -> str:
        return hashlib.sha256(dumps_canonical_bytes(request.to_json_obj())).hexdigest()[:16]

    def report_dir(self, report_id: str) -> Path:
        return self.config.data_dir / "reports" / report_id

    def submit(self, request: AnalysisRequest) -> Job:
        report_id = self.job_id(request)
        with self._jobs_lock:
            existing = self.jobs.get(report_id)
            if existing is not None:
                if not existing.terminal:
                    raise JobConflict(report_id)
                if existing.status.state is JobState.Done:
                    # re-posting a finished request is a no-op
                    return existing
            job = Job(report_id, request)
            self.jobs[report_id] = job
            job.advance(JobState.Queued)
            self.executor.submit(self._run_job, job)
            return job

    def _run_job(self, job: Job) -> None:
        try:
            deps = PipelineDeps(
                adapters=self.config.adapters,
                store=self.store,
                gateway=self.gateway,
                provider_id=self.config.provider_id,
                progress=lambda phase, step: job.advance(JobState(phase), step=step),
            )
            if job.request.kind is ReportKind.Url:
                report = generate_url_report(job.request, deps)
            else:
                report = generate_report(job.request, deps)
            write_report_files(report, self.report_dir(job.report_id))
            job.report = report
            job.advance(JobState.Done)
        except Exception as exc:  # noqa: BLE001 - failure reason goes to the status log
            job.advance(JobState.Failed, reason=f"{type(exc).__name__}: {exc}")

    def shutdown(self) -> None:
        self.executor.shutdown(wait=True, cancel_futures=True)


def _json_response(obj: Any, status_code: int = 200) -> Response:
    return Response(
        content=dumps_canonical_bytes(obj),
        status_code=status_code,
        media_type="application/json",
    )


def _error(status_code: int, code: str, message: str, **extra: Any) -> Response:
    body = {"error": {"code": code, "message": message}}
    body.update(extra)
    return _json_response(body, status_code)


def _chat_fallback_request(svc: ServiceState, message: str) -> AnalysisRequest:
    """One LLM attempt at structuring a query the rule grammar rejected.
    Anything short of valid request JSON keeps the original NoKeyword."""
    prompt = (
        "Convert the request below into a JSON object with keys: keyword "
        '(string), window ({"start": "YYYY-MM-DD", "end": "YYYY-MM-DD"}), kind '
        '(one of "past", "present", "future", "url"), and optionally synonyms '
        "(list of strings) and url (string). Reply with the JSON object only.\n\n"
        f"REQUEST: {message}"
    )
    response = svc.gateway.complete(
        CompletionRequest(
            system_prompt="You turn analysis requests into structured JSON.",
            user_prompt=prompt,
            provider_id=svc.config.provider_id,
        )
    )
    return AnalysisRequest.from_json_obj(loads(response.text))


def create_app(config: ServiceConfig | None = None, gateway: Gateway | None = None) -> FastAPI:
    if config is None:
        config = load_service_config()
    svc = ServiceState(config, gateway)

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        yield
        svc.shutdown()

    app = FastAPI(title="sentiment report service", lifespan=lifespan)
    app.state.svc = svc

    if config.console_dir is not None and config.console_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount(
            "/console",
            StaticFiles(directory=config.console_dir, html=True),
            name="console",
        )

    def _submit(request: AnalysisRequest) -> Response:
        try:
            job = svc.submit(request)
        except JobConflict as exc:
            return _error(
                409, "Conflict", str(exc), report_id=exc.report_id,
            )
        return _json_response(
            {
                "report_id": job.report_id,
                "status_url": f"/api/v1/reports/{job.report_id}/status",
            },
            status_code=202,
        )

    @app.post("/api/v1/reports")
    async def create_report(request: Request) -> Response:
        try:
            parsed = AnalysisRequest.from_json_obj(loads(await request.body()))
        except ValidationError as exc:
            return _error(400, type(exc).__name__, str(exc))
        except Exception as exc:  # malformed JSON or missing keys
            return _error(400, "ValidationError", str(exc))
        return _submit(parsed)

    @app.get("/api/v1/reports/{report_id}")
    async def get_report(report_id: str) -> Response:
        if not _ID_RE.fullmatch(report_id):
            return _error(404, "NotFound", f"unknown report {report_id!r}")
        path = svc.report_dir(report_id) / "report.json"
        if not path.exists():
            return _error(404, "NotFound", f"unknown report {report_id!r}")
        return Response(content=path.read_bytes(), media_type="application/json")

    @app.get("/api/v1/reports/{report_id}/status")
    async def get_status(report_id: str) -> Response:
        job = svc.jobs.get(report_id)
        if job is None:
            return _error(404, "NotFound", f"unknown job {report_id!r}")
        return _json_response(job.status_json())

    @app.get("/api/v1/reports/{report_id}/events")
    async def get_events(report_id: str) -> Response:
        job = svc.jobs.get(report_id)
        if job is None:
            return _error(404, "NotFound", f"unknown job {report_id!r}")

        def stream() -> Iterator[bytes]:
            index = 0
            while True:
                job.wait_for_event(index, timeout=30.0)
                events = job.snapshot_events()
                while index < len(events):
                    event = events[index]
                    payload = dumps_canonical_bytes(event.to_json_obj())
                    yield b"data: " + payload + b"\n\n"
                    if event.state in TERMINAL_STATES:
                        return
                    index += 1

        return StreamingResponse(stream(), media_type="text/event-stream")

    # `from` is a Python keyword, so the records route reads its query
    # parameters off the raw request
    @app.get("/api/v1/records")
    async def get_records(request: Request) -> Response:
        params = request.query_params
        keyword = params.get("keyword", "")
        if not keyword.strip():
            return _error(400, "NoKeyword", "keyword query parameter is required")
        try:
            window = DateWindow(
                dt.date.fromisoformat(params.get("from", "")),
                dt.date.fromisoformat(params.get("to", "")),
            )
        except BadDate as exc:
            return _error(400, "BadDate", str(exc))
        except ValueError as exc:
            return _error(400, "BadDate", f"invalid date: {exc}")
        fill = Fill.CARRY_FORWARD if params.get("fill") == "carry_forward" else Fill.NONE
        records = svc.store.get_range(keyword, window.start, window.end, fill=fill)
        return _json_response([r.to_json_obj() for r in records])

    @app.get("/api/v1/settings")
    async def get_settings() -> Response:
        return _json_response(svc.settings)

    @app.put("/api/v1/settings")
    async def put_settings(request: Request) -> Response:
        try:
            patch = loads(await request.body())
            if not isinstance(patch, dict):
                raise ValidationError("settings patch must be a JSON object")
            merged = svc.update_settings(patch)
        except ValidationError as exc:
            return _error(400, type(exc).__name__, str(exc))
        except Exception as exc:
            return _error(400, "ValidationError", str(exc))
        return _json_response(merged)

    @app.post("/api/v1/chat")
    async def chat(request: Request) -> Response:
        try:
            body = loads(await request.body())
            message = body.get("message", "") if isinstance(body, dict) else ""
        except Exception:
            message = ""
        try:
            parsed = parse_query(message)
        except NoKeyword as exc:
            if not svc.config.chat_llm_fallback:
                return _error(422, "NoKeyword", str(exc))
            try:
                parsed = _chat_fallback_request(svc, message)
            except Exception:
                return _error(422, "NoKeyword", str(exc))
        except ValidationError as exc:
            return _error(400, type(exc).__name__, str(exc))
        parsed = svc.apply_settings(parsed)
        try:
            job = svc.submit(parsed)
        except JobConflict as exc:
            return _error(409, "Conflict", str(exc), report_id=exc.report_id)
        return _json_response(
            {"request": parsed.to_json_obj(), "report_id": job.report_id},
            status_code=202,
        )

    return app


def run_service(config: ServiceConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host=config.listen_host, port=config.listen_port)
