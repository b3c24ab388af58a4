// @vitest-environment node
//
// Full-stack pass against a live service process with replayed sources
// and the stub text provider: utterance in, report out, settings round
// trips. Network calls use node's own fetch; rendered output is parsed
// with an explicit DOM since there is no browser here.

import { ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { Window } from "happy-dom";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { ApiClient } from "../src/client.js";
import { ConsoleStore } from "../src/store.js";
import { pieChart } from "../src/charts.js";
import {
  renderConversation,
  renderReportView,
  renderSettingsForm,
} from "../src/views.js";
import { mount, sliceAngle } from "./helpers.js";

const PORT = 18642;
const BASE = `http://127.0.0.1:${PORT}`;

const dom = new Window();
globalThis.document = dom.document as unknown as Document;

let proc: ChildProcess;
let dataDir: string;
let stderrBuf = "";

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

async function waitReady(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/api/v1/settings`);
      if (response.ok) return;
    } catch {
      // not listening yet
    }
    await sleep(250);
  }
  throw new Error(`service did not come up on ${BASE}\n${stderrBuf}`);
}

beforeAll(async () => {
  dataDir = mkdtempSync(join(tmpdir(), "console-e2e-"));
  const boot =
    "import sys\n" +
    "from oracleloom.service import ServiceConfig, run_service\n" +
    "run_service(ServiceConfig(data_dir=sys.argv[1], listen_host='127.0.0.1', listen_port=int(sys.argv[2])))\n";
  proc = spawn("python3", ["-c", boot, dataDir, String(PORT)], {
    stdio: ["ignore", "ignore", "pipe"],
  });
  proc.stderr!.on("data", (chunk: Buffer) => {
    stderrBuf += chunk.toString();
  });
  await waitReady(30_000);
}, 45_000);

afterAll(() => {
  proc?.kill();
  if (dataDir) rmSync(dataDir, { recursive: true, force: true });
});

// one store for the whole flow, like one open console tab. Test order
// matters: stored settings fold into later chat requests, so the chat
// exchange runs before any settings are changed.
const store = new ConsoleStore(new ApiClient(BASE));

describe("console against the live service", () => {
  it("a chat utterance becomes a done entry with an open report", async () => {
    const entry = await store.sendMessage(
      "Predict the emotional trend of the Halloween Holiday from October 1, 2019"
    );
    expect(entry.status).toBe("done");
    expect(entry.reportId).toBeTruthy();
    expect(entry.request?.kind).toBe("future");

    const host = mount(renderConversation(store.state.conversation, store.reportCache));
    const bubble = host.querySelector(".bubble.reply") as HTMLElement;
    expect(bubble.dataset.status).toBe("done");

    await store.openReport(entry.reportId!);
    const report = store.state.report!;
    // the job address is a request hash; the body id also hashes the
    // crawled snapshot, so they differ. What matters is that the
    // address resolves to the report for this request.
    expect(report.request.keyword).toBe(entry.request!.keyword);
    expect(report.request.window).toEqual(entry.request!.window);
    expect(Object.keys(report.sections).length).toBe(8);
    expect(report.citations.length).toBeGreaterThan(0);
    expect(report.forecast?.predictions.length).toBe(3);
  }, 120_000);

  it("pie slice angles track the served distribution within half a degree", () => {
    const dist = store.state.report!.charts.sentiment_distribution;
    const served = Object.entries(dist).filter(([, v]) => v > 0);
    expect(served.length).toBeGreaterThanOrEqual(2);
    const total = served.reduce((sum, [, v]) => sum + v, 0);

    const host = mount(pieChart(dist));
    const slices = host.querySelectorAll<SVGPathElement>("path.slice");
    expect(slices.length).toBe(served.length);
    for (const slice of slices) {
      const cls = (slice as unknown as HTMLElement).dataset.class!;
      const expected = (360 * (dist[cls] ?? 0)) / total;
      expect(Math.abs(sliceAngle(slice) - expected)).toBeLessThan(0.5);
    }
  });

  it("saved weights come back normalized and show up in the form", async () => {
    const echoed = await store.saveSettings({
      score_weights: { w_p: 0.7, w_s: 0.7 },
    });
    expect(echoed.score_weights.w_p).toBeCloseTo(0.5, 9);
    expect(echoed.score_weights.w_s).toBeCloseTo(0.5, 9);

    const host = mount(renderSettingsForm(store.state.settings));
    expect(host.querySelector("#normalized-pair")!.textContent).toBe(
      "stored as w_p=0.5 w_s=0.5"
    );
  });

  it("turning show_urls off strips citation links from the report view", async () => {
    const before = mount(
      renderReportView(store.state.report, store.state.settings, null)
    );
    expect(before.querySelectorAll(".citation-list a").length).toBeGreaterThan(0);

    await store.saveSettings({ show_urls: false });
    expect(store.state.settings!.show_urls).toBe(false);

    const after = mount(
      renderReportView(store.state.report, store.state.settings, null)
    );
    expect(after.querySelectorAll("a").length).toBe(0);
    for (const list of after.querySelectorAll(".citation-list")) {
      expect(list.textContent).not.toContain("https://");
    }
  });
});
