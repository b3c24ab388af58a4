// Chart geometry is measured off the rendered DOM, not trusted from
// labels: pie angles are recovered from the path endpoints and compared
// against the distribution fractions.

import { describe, expect, it } from "vitest";
import { pieChart, trendChart, barChart } from "../src/charts.js";
import { Forecast } from "../src/api-types.js";
import { mount, sliceAngle } from "./helpers.js";

// the distribution of the checked-in golden report
const GOLDEN_DIST = { negative: 0.222222, neutral: 0.24183, positive: 0.535948 };

describe("pieChart", () => {
  it("slice angles are proportional to fractions within half a degree", () => {
    const host = mount(pieChart(GOLDEN_DIST));
    const total = Object.values(GOLDEN_DIST).reduce((a, b) => a + b, 0);
    const slices = host.querySelectorAll<SVGPathElement>("path.slice");
    expect(slices.length).toBe(3);
    for (const slice of slices) {
      const cls = slice.dataset.class as keyof typeof GOLDEN_DIST;
      const expected = (360 * GOLDEN_DIST[cls]) / total;
      expect(Math.abs(sliceAngle(slice) - expected)).toBeLessThan(0.5);
    }
  });

  it("angles cover the full circle", () => {
    const host = mount(pieChart(GOLDEN_DIST));
    let covered = 0;
    for (const slice of host.querySelectorAll<SVGPathElement>("path.slice")) {
      covered += sliceAngle(slice);
    }
    expect(Math.abs(covered - 360)).toBeLessThan(0.5);
  });

  it("legend shows the fractions verbatim", () => {
    const host = mount(pieChart(GOLDEN_DIST));
    const text = host.querySelector(".legend")!.textContent!;
    expect(text).toContain("0.222222");
    expect(text).toContain("0.24183");
    expect(text).toContain("0.535948");
  });

  it("a single nonzero class renders as a full circle", () => {
    const host = mount(pieChart({ negative: 0, neutral: 0, positive: 1 }));
    expect(host.querySelectorAll("path.slice").length).toBe(0);
    const circle = host.querySelector<SVGCircleElement>("circle.slice");
    expect(circle).not.toBeNull();
    expect(circle!.dataset.class).toBe("positive");
  });

  it("zero distribution renders the no-data placeholder", () => {
    const host = mount(pieChart({ negative: 0, neutral: 0, positive: 0 }));
    expect(host.querySelector(".chart-empty")).not.toBeNull();
    expect(host.textContent).toContain("no data");
    expect(host.querySelector(".slice")).toBeNull();
  });
});

const TREND: [string, number][] = [
  ["2024-05-01", 0.3],
  ["2024-05-02", 0.1],
  ["2024-05-03", -0.2],
  ["2024-05-04", 0.05],
];

const FORECAST: Forecast = {
  model_id: "ar",
  params: {},
  horizon: 3,
  predictions: [0.12, 0.18, 0.2],
};

describe("trendChart", () => {
  it("draws one point per day with exact values in titles", () => {
    const host = mount(trendChart(TREND));
    const points = host.querySelectorAll("circle.pt");
    expect(points.length).toBe(4);
    expect(host.innerHTML).toContain("2024-05-03 -0.2");
  });

  it("forecast adds a dashed segment starting at the last actual point", () => {
    const host = mount(trendChart(TREND, FORECAST));
    const dashed = host.querySelector<SVGPolylineElement>(".forecast-line");
    expect(dashed).not.toBeNull();
    expect(dashed!.getAttribute("stroke-dasharray")).toBeTruthy();
    const coords = dashed!.getAttribute("points")!.split(" ");
    expect(coords.length).toBe(1 + FORECAST.predictions.length);
    const solid = host.querySelector<SVGPolylineElement>(".trend-line")!;
    const lastActual = solid.getAttribute("points")!.split(" ").pop();
    expect(coords[0]).toBe(lastActual);
    expect(host.querySelectorAll(".forecast-pt").length).toBe(3);
  });

  it("no forecast means no dashed segment", () => {
    const host = mount(trendChart(TREND));
    expect(host.querySelector(".forecast-line")).toBeNull();
  });

  it("empty series renders the placeholder", () => {
    const host = mount(trendChart([]));
    expect(host.textContent).toContain("no data");
  });
});

describe("barChart", () => {
  it("bar widths scale with counts and labels are verbatim", () => {
    const host = mount(barChart([["takeout", 142], ["orders", 71]]));
    const bars = host.querySelectorAll<SVGRectElement>("rect.bar");
    expect(bars.length).toBe(2);
    const w0 = Number(bars[0].getAttribute("width"));
    const w1 = Number(bars[1].getAttribute("width"));
    expect(w1 / w0).toBeCloseTo(0.5, 5);
    expect(host.textContent).toContain("142");
    expect(host.textContent).toContain("71");
  });

  it("empty input renders the placeholder", () => {
    const host = mount(barChart([]));
    expect(host.textContent).toContain("no data");
  });
});
