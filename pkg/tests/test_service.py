"""HTTP facade tests: async job lifecycle, idempotency, persisted report
retrieval, records/settings endpoints, chat parsing, and the job state
machine's no-regress property."""

import contextlib
import datetime as dt
import json
import threading
import time

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st
from fastapi.testclient import TestClient

from oracleloom.canonical import dumps_canonical_bytes, loads
from oracleloom.errors import ValidationError
from oracleloom.gateway import CompletionResponse, Gateway, complete_stub
from oracleloom.records import Fill, RecordStore
from oracleloom.service import (
    JobState,
    JobStatus,
    ServiceConfig,
    _STATE_RANK,
    create_app,
    load_service_config,
)

PRESENT_REQ = {
    "keyword": "food delivery",
    "synonyms": ["takeout"],
    "window": {"start": "2024-05-01", "end": "2024-05-14"},
    "kind": "present",
    "score_weights": {"w_p": 0.7, "w_s": 0.3},
}

URL_REQ = {
    "keyword": "food delivery",
    "window": {"start": "2024-05-01", "end": "2024-05-14"},
    "kind": "url",
    "url": "https://dailybite.example/2024-05-10/courier-coop-profile-3001",
}


@pytest.fixture()
def make_client(tmp_path):
    with contextlib.ExitStack() as stack:

        def _make(config=None, gateway=None, subdir="data"):
            cfg = config if config is not None else ServiceConfig(data_dir=tmp_path / subdir)
            return stack.enter_context(TestClient(create_app(cfg, gateway)))

        yield _make


@pytest.fixture()
def client(make_client):
    return make_client()


def _wait_done(client, report_id, timeout=30.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        status = client.get(f"/api/v1/reports/{report_id}/status").json()
        if status["state"] in ("done", "failed"):
            return status
        time.sleep(0.02)
    raise AssertionError(f"job {report_id} did not finish: {status}")


class TestJobStatusMachine:
    def test_happy_sequence_is_accepted(self):
        status = JobStatus("a" * 16)
        status.advance(JobState.Queued)
        status.advance(JobState.Crawling)
        status.advance(JobState.Scoring)
        for step in range(1, 9):
            status.advance(JobState.Synthesizing, step=step)
        status.advance(JobState.Done)
        assert status.state is JobState.Done
        assert len(status.events) == 12

    def test_states_may_be_skipped_but_never_revisited(self):
        status = JobStatus("a" * 16)
        status.advance(JobState.Queued)
        status.advance(JobState.Synthesizing, step=3)
        with pytest.raises(ValidationError):
            status.advance(JobState.Crawling)

    def test_synthesis_step_cannot_regress(self):
        status = JobStatus("a" * 16)
        status.advance(JobState.Synthesizing, step=5)
        with pytest.raises(ValidationError):
            status.advance(JobState.Synthesizing, step=4)

    def test_terminal_states_accept_nothing(self):
        status = JobStatus("a" * 16)
        status.advance(JobState.Done)
        with pytest.raises(ValidationError):
            status.advance(JobState.Done)
        failed = JobStatus("b" * 16)
        failed.advance(JobState.Failed, reason="boom")
        with pytest.raises(ValidationError):
            failed.advance(JobState.Queued)

    def test_failure_is_reachable_from_any_live_state(self):
        for prefix in ([], [JobState.Queued], [JobState.Queued, JobState.Scoring]):
            status = JobStatus("c" * 16)
            for state in prefix:
                status.advance(state)
            status.advance(JobState.Failed, reason="boom")
            assert status.state is JobState.Failed

    @hyp_settings(max_examples=200, deadline=None)
    @given(
        st.lists(
            st.tuples(
                st.sampled_from(list(JobState)),
                st.integers(min_value=1, max_value=8),
            ),
            max_size=12,
        )
    )
    def test_accepted_logs_never_regress(self, moves):
        status = JobStatus("d" * 16)
        for state, step in moves:
            try:
                status.advance(state, step=step if state is JobState.Synthesizing else None)
            except ValidationError:
                pass
        ranks = [_STATE_RANK[e.state] for e in status.events]
        assert ranks == sorted(ranks)
        steps = [e.step for e in status.events if e.state is JobState.Synthesizing]
        assert steps == sorted(steps)

    def test_status_json_shape(self):
        status = JobStatus("e" * 16)
        status.advance(JobState.Queued)
        status.advance(JobState.Synthesizing, step=2)
        obj = status.to_json_obj()
        assert obj["report_id"] == "e" * 16
        assert obj["state"] == "synthesizing"
        assert obj["step"] == 2
        assert [e["state"] for e in obj["events"]] == ["queued", "synthesizing"]
        assert all("at" in e for e in obj["events"])


class TestServiceConfig:
    def test_stub_provider_is_always_present(self, tmp_path):
        config = ServiceConfig(data_dir=tmp_path, providers={})
        assert "stub" in config.providers

    def test_unknown_default_provider_rejected(self, tmp_path):
        with pytest.raises(ValidationError):
            ServiceConfig(data_dir=tmp_path, provider_id="missing")

    def test_from_json_obj_round_trip(self, tmp_path):
        obj = {
            "data_dir": str(tmp_path / "d"),
            "listen_port": 9000,
            "score_weights": {"w_p": 0.6, "w_s": 0.4},
            "chat_llm_fallback": True,
        }
        config = ServiceConfig.from_json_obj(obj)
        assert config.listen_port == 9000
        assert config.score_weights.w_p == 0.6
        assert config.chat_llm_fallback is True
        assert len(config.adapters) == 5  # packaged replay sources fill in

    def test_load_from_env_path(self, tmp_path, monkeypatch):
        path = tmp_path / "conf.json"
        path.write_text(
            json.dumps({"data_dir": str(tmp_path / "d"), "listen_port": 9111})
        )
        monkeypatch.setenv("ORACLELOOM_CONFIG", str(path))
        config = load_service_config()
        assert config.listen_port == 9111

    def test_defaults_without_config(self, monkeypatch):
        monkeypatch.delenv("ORACLELOOM_CONFIG", raising=False)
        config = load_service_config()
        assert config.listen_host == "127.0.0.1"
        assert config.listen_port == 8787


class TestReportJobs:
    def test_post_runs_job_to_done(self, client):
        response = client.post("/api/v1/reports", json=PRESENT_REQ)
        assert response.status_code == 202
        body = response.json()
        report_id = body["report_id"]
        assert body["status_url"] == f"/api/v1/reports/{report_id}/status"
        status = _wait_done(client, report_id)
        assert status["state"] == "done"
        states = [e["state"] for e in status["events"]]
        assert states == (
            ["queued", "crawling", "scoring"] + ["synthesizing"] * 8 + ["done"]
        )
        steps = [e["step"] for e in status["events"] if e["state"] == "synthesizing"]
        assert steps == list(range(1, 9))

    def test_get_report_matches_persisted_file(self, make_client, tmp_path):
        config = ServiceConfig(data_dir=tmp_path / "data")
        client = make_client(config=config)
        report_id = client.post("/api/v1/reports", json=PRESENT_REQ).json()["report_id"]
        _wait_done(client, report_id)
        response = client.get(f"/api/v1/reports/{report_id}")
        assert response.status_code == 200
        persisted = (config.data_dir / "reports" / report_id / "report.json").read_bytes()
        assert response.content == persisted
        # the inner content id hashes request plus document snapshot
        assert loads(response.content)["id"] != report_id

    def test_reversed_window_is_bad_date(self, client):
        bad = dict(PRESENT_REQ, window={"start": "2024-05-14", "end": "2024-05-01"})
        response = client.post("/api/v1/reports", json=bad)
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "BadDate"

    def test_malformed_body_is_400(self, client):
        response = client.post("/api/v1/reports", content=b"{not json")
        assert response.status_code == 400

    def test_unknown_ids_are_404(self, client):
        assert client.get("/api/v1/reports/0123456789abcdef").status_code == 404
        assert client.get("/api/v1/reports/0123456789abcdef/status").status_code == 404
        assert client.get("/api/v1/reports/0123456789abcdef/events").status_code == 404
        assert client.get("/api/v1/reports/../escape").status_code == 404

    def test_concurrent_duplicate_gets_409_then_idempotent_replay(self, make_client, tmp_path):
        release = threading.Event()

        def gated(request):
            release.wait(timeout=30)
            return complete_stub(request)

        config = ServiceConfig(data_dir=tmp_path / "data")
        client = make_client(config=config, gateway=Gateway(handlers={"stub": gated}))
        first = client.post("/api/v1/reports", json=PRESENT_REQ)
        assert first.status_code == 202
        report_id = first.json()["report_id"]

        second = client.post("/api/v1/reports", json=PRESENT_REQ)
        assert second.status_code == 409
        assert second.json()["report_id"] == report_id
        assert second.json()["error"]["code"] == "Conflict"

        release.set()
        _wait_done(client, report_id)
        third = client.post("/api/v1/reports", json=PRESENT_REQ)
        assert third.status_code == 202
        assert third.json()["report_id"] == report_id

    def test_event_stream_emits_ordered_transitions_and_ends(self, client):
        report_id = client.post("/api/v1/reports", json=PRESENT_REQ).json()["report_id"]
        with client.stream("GET", f"/api/v1/reports/{report_id}/events") as response:
            assert response.headers["content-type"].startswith("text/event-stream")
            events = [
                json.loads(line[len("data: "):])
                for line in response.iter_lines()
                if line.startswith("data: ")
            ]
        states = [e["state"] for e in events]
        assert states[0] == "queued"
        assert states[-1] == "done"
        ranks = [
            {"queued": 0, "crawling": 1, "scoring": 2, "synthesizing": 3, "done": 4}[s]
            for s in states
        ]
        assert ranks == sorted(ranks)

    def test_failed_job_reports_reason(self, client):
        request = dict(PRESENT_REQ, keyword="xylographic zeppelin", synonyms=[])
        report_id = client.post("/api/v1/reports", json=request).json()["report_id"]
        status = _wait_done(client, report_id)
        assert status["state"] == "failed"
        assert "NoData" in status["reason"]
        assert client.get(f"/api/v1/reports/{report_id}").status_code == 404

    def test_url_kind_runs_the_page_pipeline(self, client):
        report_id = client.post("/api/v1/reports", json=URL_REQ).json()["report_id"]
        status = _wait_done(client, report_id)
        assert status["state"] == "done"
        report = client.get(f"/api/v1/reports/{report_id}").json()
        assert report["url_assessment"]["label"] == "positive"
        assert set(report["sections"]) == {
            "introduction", "summary", "conclusion", "chart_data",
        }


class TestRecordsEndpoint:
    def test_empty_store_returns_empty_list(self, client):
        response = client.get(
            "/api/v1/records",
            params={"keyword": "food delivery", "from": "2024-05-01", "to": "2024-05-03"},
        )
        assert response.status_code == 200
        assert response.json() == []

    def test_range_matches_store_contents(self, make_client, tmp_path):
        config = ServiceConfig(data_dir=tmp_path / "data")
        client = make_client(config=config)
        report_id = client.post("/api/v1/reports", json=PRESENT_REQ).json()["report_id"]
        _wait_done(client, report_id)
        response = client.get(
            "/api/v1/records",
            params={
                "keyword": "food delivery",
                "from": "2024-05-01",
                "to": "2024-05-14",
                "fill": "carry_forward",
            },
        )
        store = RecordStore(config.data_dir)
        expected = store.get_range(
            "food delivery", dt.date(2024, 5, 1), dt.date(2024, 5, 14),
            fill=Fill.CARRY_FORWARD,
        )
        assert response.json() == [r.to_json_obj() for r in expected]
        assert len(response.json()) == 14

    def test_reversed_range_is_400(self, client):
        response = client.get(
            "/api/v1/records",
            params={"keyword": "x", "from": "2024-05-03", "to": "2024-05-01"},
        )
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "BadDate"

    def test_missing_keyword_is_400(self, client):
        response = client.get(
            "/api/v1/records", params={"from": "2024-05-01", "to": "2024-05-02"}
        )
        assert response.status_code == 400


class TestSettings:
    def test_defaults_before_any_put(self, client):
        body = client.get("/api/v1/settings").json()
        assert body == {
            "score_weights": {"w_p": 1.0, "w_s": 0.0},
            "source_weights": {},
            "show_urls": True,
        }

    def test_put_normalizes_and_echoes(self, client):
        response = client.put("/api/v1/settings", json={"w_p": 7, "w_s": 3})
        assert response.status_code == 200
        assert response.json()["score_weights"] == {"w_p": 0.7, "w_s": 0.3}
        assert client.get("/api/v1/settings").json()["score_weights"] == {
            "w_p": 0.7, "w_s": 0.3,
        }

    def test_all_zero_weights_rejected(self, client):
        response = client.put("/api/v1/settings", json={"w_p": 0, "w_s": 0})
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "AllZero"
        response = client.put(
            "/api/v1/settings", json={"source_weights": {"bing_news": 0, "twitter": 0}}
        )
        assert response.status_code == 400
        assert response.json()["error"]["code"] == "AllZero"

    def test_settings_survive_restart(self, make_client, tmp_path):
        config = ServiceConfig(data_dir=tmp_path / "shared")
        first = make_client(config=config)
        first.put(
            "/api/v1/settings",
            json={"w_p": 0.7, "w_s": 0.3, "show_urls": False,
                  "source_weights": {"twitter": 2.0}},
        )
        second = make_client(config=ServiceConfig(data_dir=tmp_path / "shared"))
        body = second.get("/api/v1/settings").json()
        assert body["score_weights"] == {"w_p": 0.7, "w_s": 0.3}
        assert body["show_urls"] is False
        assert body["source_weights"] == {"twitter": 2.0}

    def test_settings_file_is_canonical_json(self, make_client, tmp_path):
        config = ServiceConfig(data_dir=tmp_path / "data")
        client = make_client(config=config)
        client.put("/api/v1/settings", json={"w_p": 0.7, "w_s": 0.3})
        raw = (config.data_dir / "settings.json").read_bytes()
        assert raw == dumps_canonical_bytes(loads(raw))


class TestChat:
    def test_message_becomes_a_job(self, client):
        response = client.post(
            "/api/v1/chat",
            json={"message": "analyze public opinion on food delivery from 2024-05-01 to 2024-05-14"},
        )
        assert response.status_code == 202
        body = response.json()
        assert body["request"]["keyword"] == "food delivery"
        assert body["request"]["window"] == {"start": "2024-05-01", "end": "2024-05-14"}
        status = _wait_done(client, body["report_id"])
        assert status["state"] == "done"

    def test_chat_applies_stored_settings(self, client):
        client.put("/api/v1/settings", json={"w_p": 0.7, "w_s": 0.3, "show_urls": False})
        body = client.post(
            "/api/v1/chat",
            json={"message": "analyze public opinion on food delivery from 2024-05-01 to 2024-05-14"},
        ).json()
        assert body["request"]["score_weights"] == {"w_p": 0.7, "w_s": 0.3}
        assert body["request"]["show_urls"] is False

    def test_gibberish_without_fallback_is_422(self, client):
        response = client.post("/api/v1/chat", json={"message": "???!!!"})
        assert response.status_code == 422
        assert response.json()["error"]["code"] == "NoKeyword"

    def test_fallback_uses_one_llm_call_when_enabled(self, make_client, tmp_path):
        fallback_request = {
            "keyword": "food delivery",
            "window": {"start": "2024-05-01", "end": "2024-05-14"},
            "kind": "present",
        }

        def structured(request):
            if "Convert the request" in request.user_prompt:
                return CompletionResponse(
                    text=json.dumps(fallback_request), tokens_in=1, tokens_out=1,
                    latency_ms=1, provider_id="stub", attempt=1,
                )
            return complete_stub(request)

        config = ServiceConfig(data_dir=tmp_path / "data", chat_llm_fallback=True)
        client = make_client(config=config, gateway=Gateway(handlers={"stub": structured}))
        response = client.post("/api/v1/chat", json={"message": "???!!!"})
        assert response.status_code == 202
        assert response.json()["request"]["keyword"] == "food delivery"

    def test_fallback_that_fails_returns_422(self, make_client, tmp_path):
        # plain stub output is not request JSON, so the fallback collapses
        config = ServiceConfig(data_dir=tmp_path / "data", chat_llm_fallback=True)
        client = make_client(config=config)
        response = client.post("/api/v1/chat", json={"message": "???!!!"})
        assert response.status_code == 422

    def test_url_message_parses_to_url_kind(self, client):
        response = client.post(
            "/api/v1/chat",
            json={
                "message": "analyze https://dailybite.example/2024-05-10/courier-coop-profile-3001"
            },
        )
        assert response.status_code == 202
        assert response.json()["request"]["kind"] == "url"


class TestResponseDiscipline:
    def test_bodies_are_canonical_json(self, client):
        report_id = client.post("/api/v1/reports", json=PRESENT_REQ).json()["report_id"]
        _wait_done(client, report_id)
        for path in (
            f"/api/v1/reports/{report_id}",
            f"/api/v1/reports/{report_id}/status",
            "/api/v1/settings",
        ):
            raw = client.get(path).content
            assert raw == dumps_canonical_bytes(loads(raw)), path


class TestConsoleMount:
    def test_built_assets_served_under_console(self, make_client, tmp_path):
        assets = tmp_path / "console-dist"
        assets.mkdir()
        (assets / "index.html").write_text("<!doctype html><title>console</title>")
        (assets / "main.js").write_text("export {};")
        client = make_client(
            ServiceConfig(data_dir=tmp_path / "data", console_dir=assets)
        )
        page = client.get("/console/")
        assert page.status_code == 200
        assert "console" in page.text
        assert client.get("/console/main.js").status_code == 200
        # API routes are unaffected by the mount
        assert client.get("/api/v1/settings").status_code == 200

    def test_absent_console_dir_leaves_api_only(self, client):
        assert client.get("/console/").status_code == 404

    def test_config_round_trips_console_dir(self, tmp_path):
        cfg = ServiceConfig.from_json_obj(
            {"data_dir": str(tmp_path), "console_dir": str(tmp_path / "dist")}
        )
        assert cfg.console_dir == tmp_path / "dist"
        assert load_service_config().console_dir is None
