// SVG chart builders for report views. Pure string -> string functions
// so they render identically in the page and under the test DOM.
//
// Displayed numerics are the report's chart values verbatim
// (String(value), never reformatted); only coordinates are rounded.

import { Charts, Forecast } from "./api-types.js";

const PIE_SIZE = 220;
const PIE_R = 80;
const CLASS_COLORS: Record<string, string> = {
  positive: "#2e8b57",
  neutral: "#9097a1",
  negative: "#c0504d",
};

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function emptyChart(cls: string, width: number, height: number): string {
  return (
    `<svg class="chart ${cls} chart-empty" viewBox="0 0 ${width} ${height}">` +
    `<text x="${width / 2}" y="${height / 2}" text-anchor="middle">no data</text>` +
    `</svg>`
  );
}

/**
 * Sentiment distribution as a pie. Slice angles are proportional to the
 * fractions after normalizing by their sum, so the geometry is correct
 * even if the stored fractions carry rounding dust; a zero or empty
 * distribution renders the "no data" placeholder instead.
 */
export function pieChart(distribution: Record<string, number>): string {
  const entries = Object.entries(distribution);
  const total = entries.reduce((acc, [, v]) => acc + v, 0);
  if (!entries.length || total <= 0) {
    return emptyChart("pie", PIE_SIZE, PIE_SIZE);
  }

  const cx = PIE_SIZE / 2;
  const cy = PIE_SIZE / 2;
  const slices: string[] = [];
  const legend: string[] = [];
  let angle = -90; // start at 12 o'clock, sweep clockwise

  for (const [name, value] of entries) {
    const color = CLASS_COLORS[name] ?? "#6a6f77";
    legend.push(
      `<li class="legend-${esc(name)}">` +
        `<span class="swatch" style="background:${color}"></span>` +
        `${esc(name)} <span class="value">${String(value)}</span></li>`
    );
    if (value <= 0) continue;
    const sweep = (360 * value) / total;
    if (sweep >= 360) {
      slices.push(
        `<circle class="slice" data-class="${esc(name)}" cx="${cx}" cy="${cy}" ` +
          `r="${PIE_R}" fill="${color}"/>`
      );
      angle += sweep;
      continue;
    }
    const start = polar(cx, cy, PIE_R, angle);
    const end = polar(cx, cy, PIE_R, angle + sweep);
    const largeArc = sweep > 180 ? 1 : 0;
    slices.push(
      `<path class="slice" data-class="${esc(name)}" fill="${color}" ` +
        `d="M ${fx(cx)} ${fx(cy)} L ${fx(start.x)} ${fx(start.y)} ` +
        `A ${PIE_R} ${PIE_R} 0 ${largeArc} 1 ${fx(end.x)} ${fx(end.y)} Z"/>`
    );
    angle += sweep;
  }

  return (
    `<figure class="chart-block">` +
    `<svg class="chart pie" viewBox="0 0 ${PIE_SIZE} ${PIE_SIZE}">${slices.join("")}</svg>` +
    `<ul class="legend">${legend.join("")}</ul>` +
    `</figure>`
  );
}

function polar(cx: number, cy: number, r: number, deg: number): { x: number; y: number } {
  const rad = (deg * Math.PI) / 180;
  return { x: cx + r * Math.cos(rad), y: cy + r * Math.sin(rad) };
}

function fx(v: number): string {
  return v.toFixed(3);
}

const TREND_W = 480;
const TREND_H = 170;
const TREND_PAD = 24;

/**
 * Daily combined score as a line in the fixed [-1, 1] band, with an
 * optional dashed extension for forecast predictions beyond the window.
 */
export function trendChart(trend: [string, number][], forecast?: Forecast): string {
  if (!trend.length) return emptyChart("trend", TREND_W, TREND_H);

  const horizon = forecast ? forecast.predictions.length : 0;
  const slots = trend.length + horizon;
  const step = slots > 1 ? (TREND_W - 2 * TREND_PAD) / (slots - 1) : 0;
  const x = (i: number) => TREND_PAD + i * step;
  const y = (score: number) => {
    const clamped = Math.max(-1, Math.min(1, score));
    return TREND_H / 2 - (clamped * (TREND_H - 2 * TREND_PAD)) / 2;
  };

  const actual = trend.map(([, s], i) => `${fx(x(i))},${fx(y(s))}`);
  const points = trend
    .map(
      ([day, s], i) =>
        `<circle class="pt" cx="${fx(x(i))}" cy="${fx(y(s))}" r="2.5">` +
        `<title>${esc(day)} ${String(s)}</title></circle>`
    )
    .join("");

  let forecastPart = "";
  if (forecast && horizon > 0) {
    const tail = forecast.predictions.map(
      (p, k) => `${fx(x(trend.length + k))},${fx(y(p))}`
    );
    const dashed = [actual[actual.length - 1], ...tail].join(" ");
    const marks = forecast.predictions
      .map(
        (p, k) =>
          `<circle class="pt forecast-pt" cx="${fx(x(trend.length + k))}" ` +
          `cy="${fx(y(p))}" r="2.5"><title>+${k + 1} ${String(p)}</title></circle>`
      )
      .join("");
    forecastPart =
      `<polyline class="forecast-line" points="${dashed}" fill="none" ` +
      `stroke-dasharray="5 4"/>` + marks;
  }

  const zero = TREND_H / 2;
  return (
    `<svg class="chart trend" viewBox="0 0 ${TREND_W} ${TREND_H}">` +
    `<line class="axis" x1="${TREND_PAD}" y1="${zero}" x2="${TREND_W - TREND_PAD}" y2="${zero}"/>` +
    `<polyline class="trend-line" points="${actual.join(" ")}" fill="none"/>` +
    points +
    forecastPart +
    `</svg>`
  );
}

const BAR_W = 480;
const BAR_ROW = 24;
const LABEL_W = 150;

/** Top associated terms as horizontal bars scaled to the largest count. */
export function barChart(termBars: [string, number][]): string {
  if (!termBars.length) return emptyChart("bars", BAR_W, BAR_ROW * 3);
  const max = Math.max(...termBars.map(([, c]) => c));
  if (max <= 0) return emptyChart("bars", BAR_W, BAR_ROW * 3);

  const rows = termBars
    .map(([term, count], i) => {
      const width = ((BAR_W - LABEL_W - 60) * count) / max;
      const yTop = i * BAR_ROW + 4;
      return (
        `<text class="bar-label" x="${LABEL_W - 8}" y="${yTop + 12}" text-anchor="end">${esc(term)}</text>` +
        `<rect class="bar" data-term="${esc(term)}" x="${LABEL_W}" y="${yTop}" ` +
        `width="${fx(width)}" height="${BAR_ROW - 8}"/>` +
        `<text class="bar-value" x="${fx(LABEL_W + width + 6)}" y="${yTop + 12}">${String(count)}</text>`
      );
    })
    .join("");

  return (
    `<svg class="chart bars" viewBox="0 0 ${BAR_W} ${termBars.length * BAR_ROW + 4}">` +
    rows +
    `</svg>`
  );
}

export function renderCharts(charts: Charts, forecast?: Forecast): string {
  return (
    `<div class="charts">` +
    pieChart(charts.sentiment_distribution) +
    trendChart(charts.trend, forecast) +
    barChart(charts.term_bars) +
    `</div>`
  );
}
