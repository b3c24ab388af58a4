"""Raster chart renders. The SVG output is the contractual, byte-stable
artifact; these PNGs are the presentation-friendly copies written next to
it for people who want plain images in a browser or slide deck."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .pipeline import ChartData

_COLORS = {"positive": "#2e7d32", "neutral": "#9e9e9e", "negative": "#c62828"}


def render_png_charts(charts: "ChartData", out_dir: str | Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    dist = charts.distribution
    nonzero = [(label, frac) for label, frac in dist.items() if frac > 0]
    if nonzero:
        ax.pie(
            [frac for _, frac in nonzero],
            labels=[label.capitalize() for label, _ in nonzero],
            colors=[_COLORS[label] for label, _ in nonzero],
            autopct="%1.1f%%",
            startangle=90,
            counterclock=False,
        )
    else:
        ax.text(0.5, 0.5, "No data in window", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title("Sentiment distribution")
    path = out / "pie.png"
    fig.savefig(path, dpi=100)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    if charts.trend:
        days = [day for day, _ in charts.trend]
        scores = [score for _, score in charts.trend]
        ax.plot(days, scores, marker="o", color="#1565c0")
        ax.axhline(0.0, color="#bbbbbb", linestyle="--", linewidth=1)
        ax.set_ylim(-1.0, 1.0)
        fig.autofmt_xdate(rotation=30)
    else:
        ax.text(0.5, 0.5, "No data in window", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title("Daily combined score")
    path = out / "trend.png"
    fig.savefig(path, dpi=100)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    if charts.term_bars:
        bars = list(charts.term_bars)
        terms = [term for term, _ in bars]
        counts = [count for _, count in bars]
        positions = range(len(bars) - 1, -1, -1)
        ax.barh(list(positions), counts, color="#1565c0")
        ax.set_yticks(list(positions), labels=terms)
        ax.set_xlabel("Occurrences")
    else:
        ax.text(0.5, 0.5, "No data in window", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title("Frequent terms")
    fig.tight_layout()
    path = out / "bars.png"
    fig.savefig(path, dpi=100)
    plt.close(fig)
    written.append(path)

    return written
