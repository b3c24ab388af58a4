import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";
import { Report, SECTION_ORDER, Settings } from "../src/api-types.js";
import { ConversationEntry } from "../src/store.js";
import {
  normalizedPair,
  renderConversation,
  renderReportView,
  renderSettingsForm,
} from "../src/views.js";

// a full report produced by the pipeline, bundled with the server tests;
// the path is relative to the frontend root, where vitest runs
const GOLDEN = "../tests/golden/present_food_delivery/report.json";
const REPORT = JSON.parse(readFileSync(GOLDEN, "utf8")) as Report;

const SETTINGS: Settings = {
  score_weights: { w_p: 0.7, w_s: 0.3 },
  source_weights: { twitter: 1, bing_news: 0.5 },
  show_urls: true,
};

function mount(html: string): HTMLElement {
  const host = document.createElement("div");
  host.innerHTML = html;
  document.body.appendChild(host);
  return host;
}

describe("renderReportView", () => {
  it("renders every section in fixed order", () => {
    const host = mount(renderReportView(REPORT, SETTINGS, null));
    const sections = [...host.querySelectorAll(".report-section")].map(
      (el) => (el as HTMLElement).dataset.section
    );
    expect(sections).toEqual([...SECTION_ORDER]);
  });

  it("citations expand per section and carry links when urls are on", () => {
    const host = mount(renderReportView(REPORT, SETTINGS, null));
    const details = host.querySelectorAll("details.citations");
    expect(details.length).toBeGreaterThan(0);
    const links = host.querySelectorAll(".citation-list a");
    expect(links.length).toBe(REPORT.citations.length);
    const first = links[0] as HTMLAnchorElement;
    expect(first.getAttribute("href")).toBe(REPORT.citations[0].url);
  });

  it("hides citation urls entirely when the preference is off", () => {
    const off = { ...SETTINGS, show_urls: false };
    const host = mount(renderReportView(REPORT, off, null));
    // no anchors anywhere; links only ever come from citations
    expect(host.querySelectorAll("a").length).toBe(0);
    // and no url text inside any citation list, not just unlinked.
    // section prose is server content and is shown verbatim either way.
    for (const list of host.querySelectorAll(".citation-list")) {
      expect(list.textContent).not.toContain("https://");
    }
    const first = host.querySelector(".citation-list li")!;
    expect(first.textContent).toContain(REPORT.citations[0].source_id);
  });

  it("falls back to the request preference when settings are not loaded", () => {
    // this report was requested with show_urls on
    const host = mount(renderReportView(REPORT, null, null));
    expect(host.querySelectorAll(".citation-list a").length).toBe(
      REPORT.citations.length
    );
  });

  it("shows chart numbers exactly as served", () => {
    const host = mount(renderReportView(REPORT, SETTINGS, null));
    const legend = host.querySelector(".legend")!.textContent!;
    for (const value of Object.values(REPORT.charts.sentiment_distribution)) {
      expect(legend).toContain(String(value));
    }
  });

  it("renders errors and the empty state", () => {
    expect(renderReportView(null, SETTINGS, "report unavailable")).toContain(
      "report unavailable"
    );
    expect(renderReportView(null, SETTINGS, null)).toContain("No report open");
  });
});

describe("normalizedPair", () => {
  it("matches what the server stores", () => {
    expect(normalizedPair(0.7, 0.7)).toEqual({ w_p: 0.5, w_s: 0.5 });
    expect(normalizedPair(0.7, 0.3)).toEqual({ w_p: 0.7, w_s: 0.3 });
    expect(normalizedPair(1, 0)).toEqual({ w_p: 1, w_s: 0 });
    expect(normalizedPair(0, 0)).toBeNull();
  });
});

describe("renderSettingsForm", () => {
  it("reflects the snapshot in sliders, rows and the toggle", () => {
    const host = mount(renderSettingsForm(SETTINGS));
    expect((host.querySelector("#wp") as HTMLInputElement).value).toBe("0.7");
    expect((host.querySelector("#ws") as HTMLInputElement).value).toBe("0.3");
    expect(host.querySelector("#normalized-pair")!.textContent).toBe(
      "stored as w_p=0.7 w_s=0.3"
    );
    const twitter = host.querySelector(
      "input[name='source:twitter']"
    ) as HTMLInputElement;
    expect(twitter.value).toBe("1");
    expect(
      (host.querySelector("#show-urls") as HTMLInputElement).checked
    ).toBe(true);
  });

  it("handles the not-yet-loaded state", () => {
    expect(renderSettingsForm(null)).toContain("settings not loaded");
  });
});

describe("renderConversation", () => {
  const cache = new Map<string, Report>();

  it("prompts with an example when empty", () => {
    expect(renderConversation([], cache)).toContain("sentiment analysis report");
  });

  it("shows a rejection as an inline error bubble", () => {
    const entry: ConversationEntry = {
      id: 1,
      text: "asdf",
      status: "rejected",
      error: "no keyword in message",
    };
    const host = mount(renderConversation([entry], cache));
    expect(host.querySelector(".bubble.error")!.textContent).toBe(
      "no keyword in message"
    );
    expect(host.querySelector(".bubble.reply")).toBeNull();
  });

  it("shows progress during synthesis", () => {
    const entry: ConversationEntry = {
      id: 2,
      text: "report please",
      status: "synthesizing",
      step: 3,
    };
    const host = mount(renderConversation([entry], cache));
    expect(host.querySelector(".status")!.textContent).toBe(
      "synthesizing step 3/8"
    );
  });

  it("a done entry offers the report and a thumbnail once cached", () => {
    const entry: ConversationEntry = {
      id: 3,
      text: "report please",
      status: "done",
      reportId: REPORT.id,
    };
    const bare = mount(renderConversation([entry], cache));
    const button = bare.querySelector(".open-report") as HTMLElement;
    expect(button.dataset.report).toBe(REPORT.id);
    expect(bare.querySelector(".thumb")).toBeNull();

    cache.set(REPORT.id, REPORT);
    const cached = mount(renderConversation([entry], cache));
    expect(cached.querySelector(".thumb svg")).not.toBeNull();
  });
});
