import { describe, expect, it } from "vitest";
import {
  AnalysisRequest,
  ChatAccepted,
  JobEvent,
  JobStatus,
  Report,
  Settings,
} from "../src/api-types.js";
import { ApiRequestError } from "../src/client.js";
import { ConsoleClient, ConsoleStore, EntryStatus } from "../src/store.js";

const REQUEST: AnalysisRequest = {
  keyword: "Halloween Holiday",
  synonyms: [],
  window: { start: "2019-10-01", end: "2019-10-14" },
  kind: "future",
  source_weights: {},
  score_weights: { w_p: 1, w_s: 0 },
  show_urls: true,
};

const HAPPY_EVENTS: JobEvent[] = [
  { state: "queued", at: "t" },
  { state: "crawling", at: "t" },
  { state: "scoring", at: "t" },
  ...Array.from({ length: 8 }, (_, i) => ({
    state: "synthesizing" as const,
    at: "t",
    step: i + 1,
  })),
  { state: "done", at: "t" },
];

function sampleReport(id: string): Report {
  return {
    id,
    created_at: "t",
    request: REQUEST,
    sections: { introduction: "intro" },
    citations: [],
    charts: { sentiment_distribution: {}, term_bars: [], trend: [] },
    pipeline_trace: [],
  };
}

class FakeClient implements ConsoleClient {
  chatResponses: (ChatAccepted | ApiRequestError)[] = [];
  events: JobEvent[] = HAPPY_EVENTS;
  reports = new Map<string, Report>();
  settings: Settings = {
    score_weights: { w_p: 1, w_s: 0 },
    source_weights: {},
    show_urls: true,
  };
  watchCalls = 0;
  reportFetches = 0;

  async chat(_message: string): Promise<ChatAccepted> {
    const next = this.chatResponses.shift();
    if (!next) throw new Error("no scripted chat response");
    if (next instanceof ApiRequestError) throw next;
    return next;
  }

  async getReport(id: string): Promise<Report> {
    this.reportFetches += 1;
    const report = this.reports.get(id);
    if (!report) throw new ApiRequestError(404, "NotFound", `unknown ${id}`);
    return report;
  }

  async getSettings(): Promise<Settings> {
    return this.settings;
  }

  async putSettings(patch: Partial<Settings>): Promise<Settings> {
    // mimic the server: echo the merged, normalized result
    const merged = { ...this.settings, ...patch } as Settings;
    const { w_p, w_s } = merged.score_weights;
    const total = w_p + w_s;
    if (total !== 1 && total > 0) {
      merged.score_weights = { w_p: w_p / total, w_s: w_s / total };
    }
    this.settings = merged;
    return merged;
  }

  async watchJob(
    _id: string,
    onEvent: (e: JobEvent) => void
  ): Promise<JobStatus["state"]> {
    this.watchCalls += 1;
    for (const event of this.events) onEvent(event);
    return this.events[this.events.length - 1].state as JobStatus["state"];
  }
}

describe("ConsoleStore.sendMessage", () => {
  it("walks the entry through the full phase sequence to done", async () => {
    const client = new FakeClient();
    client.chatResponses = [{ request: REQUEST, report_id: "a".repeat(16) }];
    const store = new ConsoleStore(client);

    const seen: EntryStatus[] = [];
    store.subscribe((state) => {
      const entry = state.conversation[0];
      if (entry && entry.status !== seen[seen.length - 1]) {
        seen.push(entry.status);
      }
    });

    const entry = await store.sendMessage("predict the Halloween Holiday");
    expect(entry.status).toBe("done");
    expect(entry.reportId).toBe("a".repeat(16));
    expect(entry.request?.keyword).toBe("Halloween Holiday");
    expect(seen).toEqual([
      "sending",
      "queued",
      "crawling",
      "scoring",
      "synthesizing",
      "done",
    ]);
  });

  it("tracks synthesis steps monotonically", async () => {
    const client = new FakeClient();
    client.chatResponses = [{ request: REQUEST, report_id: "b".repeat(16) }];
    const store = new ConsoleStore(client);

    const steps: number[] = [];
    store.subscribe((state) => {
      const entry = state.conversation[0];
      if (entry?.status === "synthesizing" && entry.step !== undefined) {
        if (steps[steps.length - 1] !== entry.step) steps.push(entry.step);
      }
    });

    await store.sendMessage("predict");
    expect(steps).toEqual([1, 2, 3, 4, 5, 6, 7, 8]);
  });

  it("a 422 becomes an inline rejection and no job watch", async () => {
    const client = new FakeClient();
    client.chatResponses = [
      new ApiRequestError(422, "NoKeyword", "no keyword marker in message"),
    ];
    const store = new ConsoleStore(client);

    const entry = await store.sendMessage("asdf qwerty");
    expect(entry.status).toBe("rejected");
    expect(entry.error).toBe("no keyword marker in message");
    expect(entry.reportId).toBeUndefined();
    expect(client.watchCalls).toBe(0);
  });

  it("a failed job keeps the failure reason on the entry", async () => {
    const client = new FakeClient();
    client.chatResponses = [{ request: REQUEST, report_id: "c".repeat(16) }];
    client.events = [
      { state: "queued", at: "t" },
      { state: "crawling", at: "t" },
      { state: "failed", at: "t", reason: "no documents matched" },
    ];
    const store = new ConsoleStore(client);

    const entry = await store.sendMessage("predict");
    expect(entry.status).toBe("failed");
    expect(entry.error).toBe("no documents matched");
  });
});

describe("ConsoleStore settings and reports", () => {
  it("the snapshot mirrors the server echo after a save", async () => {
    const client = new FakeClient();
    const store = new ConsoleStore(client);
    await store.loadSettings();

    const echoed = await store.saveSettings({
      score_weights: { w_p: 0.7, w_s: 0.7 },
    });
    expect(echoed.score_weights.w_p).toBeCloseTo(0.5, 12);
    expect(store.state.settings).toEqual(echoed);
  });

  it("openReport caches by id and reuses the cache", async () => {
    const client = new FakeClient();
    const id = "d".repeat(16);
    client.reports.set(id, sampleReport(id));
    const store = new ConsoleStore(client);

    await store.openReport(id);
    await store.openReport(id);
    expect(client.reportFetches).toBe(1);
    expect(store.state.report?.id).toBe(id);
    expect(store.reportCache.get(id)?.id).toBe(id);
  });

  it("a missing report surfaces as a view error, not a throw", async () => {
    const store = new ConsoleStore(new FakeClient());
    await store.openReport("absent");
    expect(store.state.report).toBeNull();
    expect(store.state.reportError).toContain("absent");
  });
});
