"""One test per headline guarantee of the package.

Each docstring's first line is the label printed in the terminal
summary (see conftest). Tolerances and runtime ceilings are part of
the guarantees; nothing here may be loosened to make a run pass.
"""

from __future__ import annotations

import datetime as dt
import random
import string
import time
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from oracleloom.canonical import dumps_canonical, dumps_canonical_bytes, loads
from oracleloom.cli import main as cli_main
from oracleloom.forecasting import (
    MSE_NOISE_FLOOR,
    ModelId,
    Series,
    compare_models,
    default_forecast,
    fit_ar,
    fit_arima,
    forecast_ar,
    forecast_arima,
)
from oracleloom.model import DateWindow, ReportKind, ScoreWeights
from oracleloom.records import DailyRecord, Fill, RecordStore, to_series
from oracleloom.pipeline import PROSE_SECTIONS, generate_report
from oracleloom.prompts import SECTION_IDS
from oracleloom.sentiment import (
    LexiconEntry,
    ScoredDocument,
    SentimentScore,
    TimestampConfidence,
    aggregate_daily,
    combine_score,
    score_document,
)
from oracleloom.service import ServiceConfig, create_app

from _golden import GOLDEN_DIR, WINDOW, canonical_request, fresh_deps
from _oracles import oracle_score

UTC = dt.timezone.utc


def test_weighted_mix_exactness():
    """Score mixing is exact arithmetic with exact weight identities."""
    started = time.perf_counter()
    assert abs(combine_score(-0.5, 0.8, ScoreWeights(0.7, 0.3)) - (-0.11)) <= 1e-12

    rng = random.Random(7)
    polarity_only = ScoreWeights(1.0, 0.0)
    subjectivity_only = ScoreWeights(0.0, 1.0)
    for _ in range(1000):
        p = rng.uniform(-1.0, 1.0)
        s = rng.uniform(0.0, 1.0)
        assert combine_score(p, s, polarity_only) == p
        assert combine_score(p, s, subjectivity_only) == s
        w = ScoreWeights(rng.uniform(0.1, 5.0), rng.uniform(0.1, 5.0))
        assert combine_score(p, s, w) == w.w_p * p + w.w_s * s
    assert time.perf_counter() - started < 1.0


def test_scorer_oracle_equivalence():
    """Scorer agrees exactly with the brute-force span oracle."""
    started = time.perf_counter()
    rng = random.Random(23)

    def word() -> str:
        return "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(2, 8)))

    entries = {}
    while len(entries) < 24:
        w = word()
        entries[w] = LexiconEntry(
            w, round(rng.uniform(-1, 1), 3), round(rng.uniform(0, 1), 3), 1.0
        )
    while len(entries) < 30:
        w = word()
        if w in entries:
            continue
        # intensifier rows: non-unit intensity, skipped as sentiment terms
        entries[w] = LexiconEntry(w, 0.0, 0.3, round(rng.uniform(0.4, 1.8), 2))
    lexicon = dict(entries)

    vocab = (
        list(lexicon) * 3
        + ["not", "no", "never", "cannot", "didn't", "won't"]
        + [word() for _ in range(10)]
    )
    for _ in range(500):
        n = rng.randint(0, 50)
        words = [rng.choice(vocab) for _ in range(n)]
        text = ""
        for w in words:
            text += w + rng.choice([" ", " ", ", ", ". ", "! ", "\n"])
        got = score_document(text, lexicon)
        want_p, want_s, want_n = oracle_score(text, lexicon)
        assert got.matched_terms == want_n, text
        assert got.polarity == want_p, text
        assert got.subjectivity == want_s, text
    assert time.perf_counter() - started < 5.0


def test_ar_exactness():
    """Linear-trend AR fit is exact; degenerate ARIMA forms match."""
    started = time.perf_counter()
    line = Series(dt.date(2024, 1, 1), tuple(float(t) for t in range(1, 21)))

    model = fit_ar(line, 2, with_intercept=False)
    assert model.coefficients[0] == pytest.approx(2.0, abs=1e-6)
    assert model.coefficients[1] == pytest.approx(-1.0, abs=1e-6)
    fr = forecast_ar(model, line, 3)
    for got, want in zip(fr.predictions, (21.0, 22.0, 23.0)):
        assert got == pytest.approx(want, abs=1e-6)

    walk = Series(dt.date(2024, 1, 1), (0.4, -0.1, 0.25, 0.3, 0.12))
    naive = forecast_arima(fit_arima(walk, 0, 1, 0), walk, 3)
    assert naive.predictions == (0.12, 0.12, 0.12)

    rng = random.Random(11)
    for _ in range(20):
        values = tuple(rng.gauss(0, 1) for _ in range(25))
        series = Series(dt.date(2024, 1, 1), values)
        arima = fit_arima(series, 1, 0, 0)
        ar = fit_ar(series, 1, with_intercept=True)
        assert arima.ar_coefficients[0] == pytest.approx(ar.coefficients[0], abs=1e-4)
        assert arima.intercept == pytest.approx(ar.intercept, abs=1e-4)
    assert time.perf_counter() - started < 5.0


def test_model_comparison_on_known_series():
    """Backtests rank the right model family on known series."""
    started = time.perf_counter()
    line = Series(dt.date(2024, 1, 1), tuple(float(t) for t in range(1, 21)))
    ranked = compare_models(line, 3)
    assert ranked[0].model_id is ModelId.AR
    assert ranked[0].mse < 1e-6
    by_model = {fr.model_id: fr.mse for fr in ranked}
    assert by_model[ModelId.AR] < by_model[ModelId.MA]

    # a constant series is exactly predictable by every family; the
    # noise floor defines where numerical dust counts as zero
    flat = Series(dt.date(2024, 1, 1), (2.0,) * 15)
    for fr in compare_models(flat, 3):
        assert fr.mse < MSE_NOISE_FLOOR
        for v in fr.predictions:
            assert v == pytest.approx(2.0, abs=1e-9)
    assert time.perf_counter() - started < 1.0


def test_golden_present_report_bytes(tmp_path):
    """Present-kind report reproduces the checked-in golden bytes."""
    started = time.perf_counter()
    data_dir = tmp_path / "data"
    result = CliRunner().invoke(
        cli_main,
        [
            "report",
            "--keyword",
            "food delivery",
            "--synonym",
            "takeout",
            "--from",
            "2024-05-01",
            "--to",
            "2024-05-14",
            "--weights",
            "0.7,0.3",
            "--no-png",
            "--data-dir",
            str(data_dir),
        ],
    )
    assert result.exit_code == 0, result.stderr
    out_dir = Path(result.stdout.strip()).parent
    for name in ("report.md", "report.json", "pie.svg", "trend.svg", "bars.svg"):
        assert (out_dir / name).read_bytes() == (GOLDEN_DIR / name).read_bytes(), name

    obj = loads((out_dir / "report.json").read_text())
    assert set(obj["sections"]) == set(SECTION_IDS)
    assert len(obj["sections"]) == 8
    cited_sections = {c["claim_section"] for c in obj["citations"]}
    for section in PROSE_SECTIONS:
        assert section in cited_sections, section
    assert time.perf_counter() - started < 5.0


def test_future_forecast_recomputable(tmp_path):
    """Future-kind forecast is exactly recomputable from the archive."""
    deps = fresh_deps(tmp_path / "data")
    report = generate_report(canonical_request(kind=ReportKind.Future), deps)
    assert report.forecast is not None
    assert report.forecast.model_id is ModelId.AR
    assert report.forecast.horizon == 3

    records = deps.store.get_range(
        "food delivery", WINDOW.start, WINDOW.end, fill=Fill.CARRY_FORWARD
    )
    recomputed = default_forecast(to_series(records))
    assert report.forecast.predictions == recomputed.predictions
    assert report.forecast.model_id is recomputed.model_id
    assert report.forecast.params == recomputed.params


def _random_record(rng: random.Random, day: dt.date, keyword: str) -> DailyRecord:
    docs = []
    for i in range(rng.randint(1, 6)):
        polarity = rng.uniform(-1, 1)
        subjectivity = rng.uniform(0, 1)
        docs.append(
            ScoredDocument(
                url=f"https://a{rng.randrange(3)}.example/{day}/{i}",
                source_id=rng.choice(["bing_news", "twitter", "yahoo_hot"]),
                published_at=dt.datetime.combine(
                    day, dt.time(rng.randrange(24), rng.randrange(60)), tzinfo=UTC
                ),
                timestamp_confidence=rng.choice(list(TimestampConfidence)),
                text=" ".join(
                    rng.choice(["service", "delivery", "meal", "support", "order"])
                    for _ in range(rng.randint(3, 12))
                ),
                sentiment=SentimentScore(
                    polarity=polarity,
                    subjectivity=subjectivity,
                    score=polarity,
                    matched_terms=rng.randint(1, 5),
                ),
            )
        )
    return aggregate_daily(
        docs,
        day,
        {"bing_news": 1.0, "twitter": rng.uniform(0.1, 2.0), "yahoo_hot": 1.0},
        keyword=keyword,
        stopwords=frozenset(),
        generated_at=dt.datetime.combine(day, dt.time(23, 59, 59), tzinfo=UTC),
    )


def test_record_store_round_trip(tmp_path):
    """Day records round-trip byte-identically; ranged reads stay ordered."""
    rng = random.Random(99)
    base = dt.date(2024, 5, 1)

    for i in range(100):
        record = _random_record(rng, base + dt.timedelta(days=rng.randrange(60)), f"k{i}")
        first = dumps_canonical_bytes(record.to_json_obj())
        reparsed = DailyRecord.from_json_obj(loads(first))
        assert dumps_canonical_bytes(reparsed.to_json_obj()) == first

    window = DateWindow(base, base + dt.timedelta(days=13))
    all_days = list(window.days())
    for trial in range(10):
        store = RecordStore(tmp_path / f"trial{trial}")
        kept = sorted(rng.sample(all_days, rng.randint(1, len(all_days))))
        for day in kept:
            store.put_record(_random_record(rng, day, "subset"))

        plain = store.get_range("subset", window.start, window.end)
        assert [r.day for r in plain] == kept

        filled = store.get_range("subset", window.start, window.end, fill=Fill.CARRY_FORWARD)
        # nothing precedes the first stored day; every later gap holds a
        # synthetic copy of its most recent real predecessor
        expected_days = [d for d in all_days if d >= kept[0]]
        assert [r.day for r in filled] == expected_days
        last_real = None
        for r in filled:
            if r.day in kept:
                assert not r.synthetic
                last_real = r
            else:
                assert r.synthetic
                assert r.per_source == {}
                assert r.combined == last_real.combined


def test_eval_floor_on_bundled_reviews():
    """Bundled review set scores at least 0.70 accuracy."""
    result = CliRunner().invoke(cli_main, ["eval-sentiment", "--json"])
    assert result.exit_code == 0, result.stderr
    obj = loads(result.stdout)
    assert obj["rows"] == 200
    assert obj["positive"]["support"] == 100
    assert obj["negative"]["support"] == 100
    assert obj["weights"] == {"w_p": 1.0, "w_s": 0.0}
    assert obj["accuracy"] >= 0.70


def test_service_contract(tmp_path):
    """HTTP service: monotone job states, persisted bytes, validation."""
    request_body = {
        "keyword": "food delivery",
        "synonyms": ["takeout"],
        "window": {"start": "2024-05-01", "end": "2024-05-14"},
        "kind": "present",
        "score_weights": {"w_p": 0.7, "w_s": 0.3},
    }
    config = ServiceConfig(data_dir=tmp_path / "svc")
    with TestClient(create_app(config)) as client:
        posted = client.post("/api/v1/reports", content=dumps_canonical(request_body))
        assert posted.status_code == 202
        report_id = posted.json()["report_id"]

        states = []
        with client.stream("GET", f"/api/v1/reports/{report_id}/events") as stream:
            for line in stream.iter_lines():
                if line.startswith("data: "):
                    states.append(loads(line[len("data: ") :]))
        names = [s["state"] for s in states]
        assert names == ["queued", "crawling", "scoring"] + ["synthesizing"] * 8 + ["done"]
        steps = [s["step"] for s in states if s["state"] == "synthesizing"]
        assert steps == list(range(1, 9))

        got = client.get(f"/api/v1/reports/{report_id}")
        assert got.status_code == 200
        persisted = (tmp_path / "svc" / "reports" / report_id / "report.json").read_bytes()
        assert got.content == persisted

        bad = dict(request_body, window={"start": "2024-05-14", "end": "2024-05-01"})
        rejected = client.post("/api/v1/reports", content=dumps_canonical(bad))
        assert rejected.status_code == 400
        assert rejected.json()["error"]["code"] == "BadDate"
