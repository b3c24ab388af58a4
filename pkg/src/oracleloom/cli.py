"""Command line entry points.

One executable, six subcommands covering the whole surface: archive a
keyword window, build a report, project the score forward, benchmark a
completion provider, measure the scorer against labeled reviews, and
run the HTTP API. Exit codes are part of the contract:

    0  success
    2  bad usage or invalid arguments
    3  the request produced no documents and no records
    4  provider or adapter configuration refused to run
    5  an upstream endpoint failed after retries

Every command takes --data-dir (all writes stay under it) and --json
(one canonical JSON document on stdout for scripting).
"""

from __future__ import annotations

import datetime as dt
import json
import re
import threading
import time
from contextlib import contextmanager
from dataclasses import replace
from pathlib import Path
from typing import Iterator

import click

from .canonical import dumps_canonical, dumps_canonical_bytes
from .crawler import SourceAdapterConfig, default_adapter_configs
from .errors import (
    BadDate,
    BudgetExceeded,
    FixtureMissing,
    LiveDisabled,
    NoData,
    NotFound,
    OracleloomError,
    ProviderUnknown,
    Timeout,
    UpstreamError,
    ValidationError,
)
from .forecasting import (
    DEFAULT_HORIZON,
    ForecastResult,
    Series,
    compare_models,
    default_forecast,
    fit_ar,
    fit_arima,
    forecast_ar,
    forecast_arima,
    moving_average_forecast,
)
from .gateway import Gateway, ProviderConfig, default_providers
from .model import AnalysisRequest, DateWindow, ReportKind, ScoreWeights
from .pipeline import PipelineDeps, generate_report, ingest_window, write_report_artifacts
from .records import Fill, RecordStore, to_series
from .sentiment import classify, default_lexicon, score_document
from .service import load_service_config, run_service
from .timeutil import utc_now

DEFAULT_DATA_DIR = "oracleloom-data"


@click.group()
def main() -> None:
    """Keyword sentiment archive, forecasts, reports, and the API."""


# --- shared plumbing -------------------------------------------------------


def _common(fn):
    fn = click.option(
        "--data-dir",
        default=None,
        metavar="DIR",
        show_default=DEFAULT_DATA_DIR,
        help="root directory for records and report artifacts",
    )(fn)
    fn = click.option(
        "--json",
        "as_json",
        is_flag=True,
        help="emit canonical JSON instead of text",
    )(fn)
    return fn


def _resolve(data_dir: str | None) -> Path:
    return Path(data_dir) if data_dir else Path(DEFAULT_DATA_DIR)


def _die(code: int, exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    raise SystemExit(code)


@contextmanager
def _mapped_errors() -> Iterator[None]:
    """Translate package errors to the documented exit codes."""
    try:
        yield
    except click.ClickException:
        raise
    except (NoData, NotFound) as exc:
        _die(3, exc)
    except (ProviderUnknown, LiveDisabled, FixtureMissing) as exc:
        _die(4, exc)
    except (UpstreamError, Timeout, BudgetExceeded) as exc:
        _die(5, exc)
    except ValidationError as exc:
        _die(2, exc)
    except OracleloomError as exc:
        _die(1, exc)


def _window(start: str, end: str) -> DateWindow:
    try:
        s = dt.date.fromisoformat(start)
        e = dt.date.fromisoformat(end)
    except ValueError as exc:
        raise BadDate(str(exc)) from None
    return DateWindow(s, e)


def _weights(text: str | None) -> ScoreWeights:
    if text is None:
        return ScoreWeights()
    parts = text.split(",")
    if len(parts) != 2:
        raise click.UsageError("--weights expects WP,WS")
    try:
        w_p, w_s = float(parts[0]), float(parts[1])
    except ValueError:
        raise click.UsageError(f"--weights expects two numbers, got {text!r}") from None
    return ScoreWeights(w_p, w_s)


def _gateway(providers_file: str | None) -> Gateway:
    if providers_file is None:
        return Gateway()
    obj = json.loads(Path(providers_file).read_text(encoding="utf-8"))
    if not isinstance(obj, dict):
        raise click.UsageError("--providers-file expects a JSON object keyed by provider id")
    providers = {
        pid: ProviderConfig.from_json_obj({"provider_id": pid, **cfg})
        for pid, cfg in obj.items()
    }
    providers.setdefault("stub", default_providers()["stub"])
    return Gateway(providers=providers)


def _deps(
    data_dir: Path,
    fixtures: str | None,
    *,
    provider: str = "stub",
    providers_file: str | None = None,
) -> PipelineDeps:
    if fixtures is None:
        adapters = default_adapter_configs()
    else:
        paths = sorted(Path(fixtures).glob("*.jsonl"))
        if not paths:
            raise click.UsageError(f"no *.jsonl captures under {fixtures}")
        adapters = [
            SourceAdapterConfig(source_id=p.stem, fixture_path=str(p)) for p in paths
        ]
    return PipelineDeps(
        adapters=adapters,
        store=RecordStore(data_dir),
        gateway=_gateway(providers_file),
        provider_id=provider,
    )


# --- ingest ----------------------------------------------------------------


@main.command()
@click.option("--keyword", required=True)
@click.option("--from", "start", required=True, metavar="YYYY-MM-DD")
@click.option("--to", "end", required=True, metavar="YYYY-MM-DD")
@click.option("--synonym", "synonyms", multiple=True, help="extra match term; repeatable")
@click.option(
    "--fixtures",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="directory of <source_id>.jsonl replay captures (default: bundled corpus)",
)
@_common
def ingest(
    keyword: str,
    start: str,
    end: str,
    synonyms: tuple[str, ...],
    fixtures: str | None,
    data_dir: str | None,
    as_json: bool,
) -> None:
    """Crawl a keyword window and archive one record per day."""
    with _mapped_errors():
        window = _window(start, end)
        request = AnalysisRequest(
            keyword=keyword, window=window, synonyms=tuple(synonyms)
        )
        deps = _deps(_resolve(data_dir), fixtures)
        ingest_window(request, deps)
        records = deps.store.get_range(keyword, window.start, window.end)
        if as_json:
            click.echo(dumps_canonical([r.to_json_obj() for r in records]))
            return
        for r in records:
            docs = sum(s.doc_count for s in r.per_source.values())
            click.echo(f"{r.day.isoformat()}  docs={docs:<4d}score={r.combined.score:+.4f}")
        click.echo(f"{len(records)} records")


# --- report ----------------------------------------------------------------


@main.command()
@click.option("--keyword", required=True)
@click.option("--from", "start", required=True, metavar="YYYY-MM-DD")
@click.option("--to", "end", required=True, metavar="YYYY-MM-DD")
@click.option(
    "--kind",
    type=click.Choice(["present", "past", "future"]),
    default="present",
    show_default=True,
)
@click.option("--provider", default="stub", show_default=True, help="synthesis provider id")
@click.option(
    "--providers-file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON map of provider configs; credentials come from each entry's env var",
)
@click.option("--synonym", "synonyms", multiple=True)
@click.option("--weights", default=None, metavar="WP,WS", help="polarity,subjectivity mix")
@click.option("--show-urls/--no-show-urls", default=True, help="cite source URLs in the markdown")
@click.option(
    "--fixtures",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="directory of <source_id>.jsonl replay captures",
)
@click.option("--png/--no-png", default=True, help="render matplotlib PNGs next to the SVGs")
@_common
def report(
    keyword: str,
    start: str,
    end: str,
    kind: str,
    provider: str,
    providers_file: str | None,
    synonyms: tuple[str, ...],
    weights: str | None,
    show_urls: bool,
    fixtures: str | None,
    png: bool,
    data_dir: str | None,
    as_json: bool,
) -> None:
    """Run the full pipeline and write the report artifacts.

    Prints the markdown path; artifacts land under DATA_DIR/reports/<id>/.
    """
    with _mapped_errors():
        window = _window(start, end)
        request = AnalysisRequest(
            keyword=keyword,
            window=window,
            kind=ReportKind(kind),
            synonyms=tuple(synonyms),
            score_weights=_weights(weights),
            show_urls=show_urls,
        )
        root = _resolve(data_dir)
        deps = _deps(root, fixtures, provider=provider, providers_file=providers_file)
        rep = generate_report(request, deps)
        out = write_report_artifacts(rep, root, png=png)
        if rep.forecast is not None:
            (out / "forecast.json").write_bytes(
                dumps_canonical_bytes(rep.forecast.to_json_obj())
            )
        if as_json:
            click.echo(dumps_canonical(rep.to_json_obj()))
        else:
            click.echo(str(out / "report.md"))


# --- forecast --------------------------------------------------------------


def _load_series(
    keyword: str | None,
    start: str | None,
    end: str | None,
    series_file: str | None,
    root: Path,
) -> Series:
    if series_file is not None:
        obj = json.loads(Path(series_file).read_text(encoding="utf-8"))
        if isinstance(obj, list):
            first, values = dt.date(1970, 1, 1), obj
        elif isinstance(obj, dict) and "values" in obj:
            try:
                first = dt.date.fromisoformat(obj.get("start", "1970-01-01"))
            except ValueError as exc:
                raise click.UsageError(f"bad start date in series file: {exc}") from None
            values = obj["values"]
        else:
            raise click.UsageError('--series-file expects [v, ...] or {"start": D, "values": [...]}')
        try:
            parsed = tuple(float(v) for v in values)
        except (TypeError, ValueError):
            raise click.UsageError("series values must be numbers") from None
        if not parsed:
            raise click.UsageError("series file has no values")
        return Series(first, parsed)
    if not (keyword and start and end):
        raise click.UsageError("provide --keyword with --from/--to, or --series-file")
    window = _window(start, end)
    records = RecordStore(root).get_range(
        keyword, window.start, window.end, fill=Fill.CARRY_FORWARD
    )
    if not records:
        raise NoData(f"no records for {keyword!r} in {window.start}..{window.end}")
    return to_series(records)


def _fit(series: Series, model_id: str, horizon: int) -> ForecastResult:
    # mirror the auto-selection families so a forced model is comparable
    if model_id == "auto":
        return default_forecast(series, horizon)
    if model_id == "ma":
        return moving_average_forecast(series, min(3, len(series)), horizon)
    if model_id == "ar":
        return forecast_ar(fit_ar(series, 2, with_intercept=True), series, horizon)
    return forecast_arima(fit_arima(series, 1, 1, 1), series, horizon)


@main.command()
@click.option("--keyword", default=None, help="forecast from this keyword's archived records")
@click.option("--from", "start", default=None, metavar="YYYY-MM-DD")
@click.option("--to", "end", default=None, metavar="YYYY-MM-DD")
@click.option(
    "--series-file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="forecast a raw JSON series instead of the archive",
)
@click.option(
    "--model",
    "model_id",
    type=click.Choice(["ma", "ar", "arima", "auto"]),
    default="auto",
    show_default=True,
)
@click.option("--horizon", type=click.IntRange(min=1), default=DEFAULT_HORIZON, show_default=True)
@click.option(
    "--holdout",
    type=click.IntRange(min=1),
    default=None,
    help="backtest: hold out the last N points and rank every model by MSE",
)
@_common
def forecast(
    keyword: str | None,
    start: str | None,
    end: str | None,
    series_file: str | None,
    model_id: str,
    horizon: int,
    holdout: int | None,
    data_dir: str | None,
    as_json: bool,
) -> None:
    """Project the daily combined score forward."""
    with _mapped_errors():
        series = _load_series(keyword, start, end, series_file, _resolve(data_dir))
        if holdout is not None:
            results = compare_models(series, holdout)
            if as_json:
                click.echo(dumps_canonical([r.to_json_obj() for r in results]))
                return
            click.echo(f"{'model':<8}{'mse':<14}predictions")
            for r in results:
                preds = " ".join(f"{v:+.4f}" for v in r.predictions)
                click.echo(f"{r.model_id.value:<8}{r.mse:<14.6g}{preds}")
            return
        result = _fit(series, model_id, horizon)
        if as_json:
            click.echo(dumps_canonical(result.to_json_obj()))
            return
        click.echo(f"model: {result.model_id.value}")
        first_ahead = series.start + dt.timedelta(days=len(series))
        for i, value in enumerate(result.predictions):
            day = first_ahead + dt.timedelta(days=i)
            click.echo(f"{day.isoformat()}  {value:+.4f}")


# --- bench-llm -------------------------------------------------------------


@main.command("bench-llm")
@click.option("--provider", default="stub", show_default=True)
@click.option("--trials", type=click.IntRange(min=2), default=5, show_default=True)
@click.option("--prompt-file", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option(
    "--providers-file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON map of provider configs for live benchmarking",
)
@_common
def bench_llm(
    provider: str,
    trials: int,
    prompt_file: str,
    providers_file: str | None,
    data_dir: str | None,
    as_json: bool,
) -> None:
    """Probe completion latency: one cold call, then warm repeats."""
    with _mapped_errors():
        prompt = Path(prompt_file).read_text(encoding="utf-8").strip()
        if not prompt:
            raise click.UsageError(f"prompt file {prompt_file} is empty")
        stats = _gateway(providers_file).bench(provider, prompt, trials)
        if as_json:
            click.echo(dumps_canonical(stats.to_json_obj()))
            return
        click.echo(f"provider:    {stats.provider_id}")
        click.echo(f"trials:      {stats.trials}")
        click.echo(f"cold start:  {stats.cold_start_ms} ms")
        click.echo(f"warm mean:   {stats.warm_mean_ms:.1f} ms")
        click.echo(f"warm stddev: {stats.warm_stddev_ms:.1f} ms")
        click.echo("tokens out:  " + " ".join(str(t) for t in stats.token_counts))


# --- eval-sentiment --------------------------------------------------------


def _read_dataset(path: str | None) -> list[tuple[str, str]]:
    if path is None:
        from importlib.resources import files

        text = files("oracleloom").joinpath("data", "eval_reviews.jsonl").read_text(
            encoding="utf-8"
        )
        source = "bundled reviews"
    else:
        text = Path(path).read_text(encoding="utf-8")
        source = path
    rows: list[tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            body, label = obj["text"], obj["label"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ValidationError(f"{source}:{lineno}: bad dataset line: {exc}") from None
        if label not in ("positive", "negative"):
            raise ValidationError(
                f"{source}:{lineno}: label must be positive or negative, got {label!r}"
            )
        rows.append((str(body), label))
    if not rows:
        raise click.UsageError("dataset is empty")
    return rows


@main.command("eval-sentiment")
@click.option(
    "--dataset",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="line-delimited JSON {text, label}; bundled review set when omitted",
)
@click.option("--weights", default=None, metavar="WP,WS", help="polarity,subjectivity mix")
@_common
def eval_sentiment(
    dataset: str | None,
    weights: str | None,
    data_dir: str | None,
    as_json: bool,
) -> None:
    """Score labeled reviews and report accuracy, precision, and recall.

    A neutral prediction never matches a label, so fence-sitting counts
    against accuracy and recall.
    """
    with _mapped_errors():
        mix = _weights(weights)
        rows = _read_dataset(dataset)
        lexicon = default_lexicon()
        tp = {"positive": 0, "negative": 0}
        fp = {"positive": 0, "negative": 0}
        fn = {"positive": 0, "negative": 0}
        neutral = 0
        for body, label in rows:
            pred = classify(score_document(body, lexicon).with_weights(mix).score).value
            if pred == label:
                tp[label] += 1
                continue
            fn[label] += 1
            if pred == "neutral":
                neutral += 1
            else:
                fp[pred] += 1

        def prf(cls: str) -> tuple[float, float]:
            denom_p = tp[cls] + fp[cls]
            denom_r = tp[cls] + fn[cls]
            return (
                tp[cls] / denom_p if denom_p else 0.0,
                tp[cls] / denom_r if denom_r else 0.0,
            )

        accuracy = (tp["positive"] + tp["negative"]) / len(rows)
        out = {
            "accuracy": accuracy,
            "rows": len(rows),
            "neutral_predictions": neutral,
            "weights": mix.to_json_obj(),
        }
        for cls in ("positive", "negative"):
            precision, recall = prf(cls)
            out[cls] = {
                "precision": precision,
                "recall": recall,
                "support": tp[cls] + fn[cls],
            }
        if as_json:
            click.echo(dumps_canonical(out))
            return
        click.echo(f"rows:      {len(rows)}")
        click.echo(f"weights:   w_p={mix.w_p:.3f} w_s={mix.w_s:.3f}")
        click.echo(f"accuracy:  {accuracy:.3f}")
        for cls in ("positive", "negative"):
            precision, recall = prf(cls)
            click.echo(
                f"{cls}:  precision={precision:.3f}  recall={recall:.3f}"
                f"  support={tp[cls] + fn[cls]}"
            )
        click.echo(f"neutral predictions: {neutral}")


# --- serve -----------------------------------------------------------------

_DAILY_RE = re.compile(r"^([01]?\d|2[0-3]):([0-5]\d)$")


def _parse_daily(text: str) -> tuple[int, int]:
    m = _DAILY_RE.match(text)
    if m is None:
        raise click.UsageError(f"--daily expects HH:MM (24h), got {text!r}")
    return int(m.group(1)), int(m.group(2))


def seconds_until(now: dt.datetime, hour: int, minute: int) -> float:
    """Seconds from `now` to the next wall-clock occurrence of HH:MM."""
    target = now.replace(hour=hour, minute=minute, second=0, microsecond=0)
    if target <= now:
        target += dt.timedelta(days=1)
    return (target - now).total_seconds()


def _start_daily_refresh(config, keywords: tuple[str, ...], hour: int, minute: int) -> None:
    def loop() -> None:
        while True:
            time.sleep(seconds_until(utc_now(), hour, minute))
            end = utc_now().date()
            window = DateWindow(end - dt.timedelta(days=1), end)
            for kw in keywords:
                try:
                    deps = PipelineDeps(
                        adapters=config.adapters,
                        store=RecordStore(config.data_dir),
                        gateway=Gateway(providers=config.providers),
                        provider_id=config.provider_id,
                    )
                    ingest_window(AnalysisRequest(keyword=kw, window=window), deps)
                except OracleloomError as exc:
                    click.echo(f"daily refresh {kw!r} failed: {exc}", err=True)

    threading.Thread(target=loop, name="daily-refresh", daemon=True).start()


@main.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="service config JSON (falls back to $ORACLELOOM_CONFIG, then defaults)",
)
@click.option("--daily", default=None, metavar="HH:MM", help="re-crawl --keyword windows daily at this time")
@click.option("--keyword", "keywords", multiple=True, help="keyword for the daily refresh; repeatable")
@_common
def serve(
    config_path: str | None,
    daily: str | None,
    keywords: tuple[str, ...],
    data_dir: str | None,
    as_json: bool,
) -> None:
    """Run the HTTP API."""
    with _mapped_errors():
        config = load_service_config(config_path)
        if data_dir is not None:
            config = replace(config, data_dir=Path(data_dir))
        if daily is not None:
            hour, minute = _parse_daily(daily)
            if not keywords:
                raise click.UsageError("--daily needs at least one --keyword")
            _start_daily_refresh(config, keywords, hour, minute)
        if as_json:
            click.echo(
                dumps_canonical(
                    {
                        "data_dir": str(config.data_dir),
                        "listen_host": config.listen_host,
                        "listen_port": config.listen_port,
                        "provider_id": config.provider_id,
                        "sources": [a.source_id for a in config.adapters],
                    }
                )
            )
        run_service(config)


if __name__ == "__main__":
    main()
