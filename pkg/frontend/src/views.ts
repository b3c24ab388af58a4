// HTML renderers. Pure state -> string so the same code drives the page
// and the DOM tests; main.ts owns wiring and event delegation.

import { Citation, Report, SECTION_ORDER, Settings } from "./api-types.js";
import { pieChart, renderCharts } from "./charts.js";
import { ConversationEntry } from "./store.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const SECTION_TITLES: Record<string, string> = {
  introduction: "Introduction",
  summary: "Summary",
  cause_analysis: "Cause Analysis",
  risk_assessment: "Risk Assessment",
  policy_suggestions: "Policy Suggestions",
  associated_words: "Associated Words",
  conclusion: "Conclusion",
  chart_data: "Chart Data",
};

function statusLine(entry: ConversationEntry): string {
  switch (entry.status) {
    case "sending":
      return "sending";
    case "synthesizing":
      return entry.step ? `synthesizing step ${entry.step}/8` : "synthesizing";
    case "failed":
      return entry.error ? `failed: ${entry.error}` : "failed";
    default:
      return entry.status;
  }
}

export function renderConversation(
  entries: ConversationEntry[],
  reportCache: Map<string, Report>
): string {
  if (!entries.length) {
    return `<p class="hint">Ask for a report, e.g. "Provide me with a sentiment analysis report on the Halloween Holiday".</p>`;
  }
  return entries
    .map((entry) => {
      const pieces = [
        `<div class="bubble user">${esc(entry.text)}</div>`,
      ];
      if (entry.status === "rejected") {
        pieces.push(
          `<div class="bubble error" data-entry="${entry.id}">${esc(entry.error ?? "rejected")}</div>`
        );
      } else {
        let body = `<span class="status status-${esc(entry.status)}">${esc(statusLine(entry))}</span>`;
        if (entry.status === "done" && entry.reportId) {
          body += ` <button class="open-report" data-report="${esc(entry.reportId)}">view report</button>`;
          const cached = reportCache.get(entry.reportId);
          if (cached) {
            body += `<div class="thumb" data-report="${esc(entry.reportId)}">${pieChart(
              cached.charts.sentiment_distribution
            )}</div>`;
          }
        }
        pieces.push(
          `<div class="bubble reply" data-entry="${entry.id}" data-status="${esc(entry.status)}">${body}</div>`
        );
      }
      return `<div class="turn">${pieces.join("")}</div>`;
    })
    .join("");
}

function citationList(citations: Citation[], showUrls: boolean): string {
  const items = citations
    .map((c) => {
      const origin = `${esc(c.source_id)} (${esc(c.timestamp_confidence)})`;
      return showUrls
        ? `<li>${origin} <a href="${esc(c.url)}" rel="noreferrer">${esc(c.url)}</a></li>`
        : `<li>${origin}</li>`;
    })
    .join("");
  return `<ul class="citation-list">${items}</ul>`;
}

export function renderReportView(
  report: Report | null,
  settings: Settings | null,
  error: string | null
): string {
  if (error) return `<div class="report-error">${esc(error)}</div>`;
  if (!report) return `<p class="hint">No report open.</p>`;

  // live preference wins over the preference baked into the request at
  // submit time, so the toggle affects every later view of any report
  const showUrls = settings ? settings.show_urls : report.request.show_urls;

  const head =
    `<header class="report-head">` +
    `<h2>${esc(report.request.keyword)}</h2>` +
    `<p class="meta">${esc(report.request.window.start)} to ${esc(report.request.window.end)}` +
    ` · ${esc(report.request.kind)} · report ${esc(report.id)}</p>` +
    `</header>`;

  const sections = SECTION_ORDER.map((sid) => {
    const text = report.sections[sid];
    if (text === undefined) return "";
    const cites = report.citations.filter((c) => c.claim_section === sid);
    const expandable = cites.length
      ? `<details class="citations"><summary>citations (${cites.length})</summary>` +
        citationList(cites, showUrls) +
        `</details>`
      : "";
    return (
      `<section class="report-section" data-section="${sid}">` +
      `<h3>${SECTION_TITLES[sid] ?? esc(sid)}</h3>` +
      `<p>${esc(text)}</p>` +
      expandable +
      `</section>`
    );
  }).join("");

  let forecastBlock = "";
  if (report.forecast) {
    const f = report.forecast;
    const values = f.predictions.map((p) => String(p)).join(", ");
    const risk = report.risk_level
      ? ` <span class="risk">risk: ${esc(report.risk_level)}</span>`
      : "";
    forecastBlock =
      `<div class="forecast-note">forecast (${esc(f.model_id)}, ` +
      `horizon ${f.horizon}): ${esc(values)}${risk}</div>`;
  }

  return (
    `<article class="report">` +
    head +
    renderCharts(report.charts, report.forecast) +
    forecastBlock +
    sections +
    `</article>`
  );
}

/**
 * Live-normalized weight pair for the settings sliders: what the server
 * will store for the given raw slider values. Null marks the all-zero
 * pair, which the form refuses to submit.
 */
export function normalizedPair(
  wp: number,
  ws: number
): { w_p: number; w_s: number } | null {
  const total = wp + ws;
  if (wp === 0 && ws === 0) return null;
  if (total === 1) return { w_p: wp, w_s: ws };
  return { w_p: wp / total, w_s: ws / total };
}

export function renderSettingsForm(settings: Settings | null): string {
  if (!settings) return `<p class="hint">settings not loaded</p>`;
  const { w_p, w_s } = settings.score_weights;

  const sourceRows = Object.entries(settings.source_weights)
    .map(
      ([sid, weight]) =>
        `<label class="source-row">${esc(sid)}` +
        `<input type="number" min="0" step="0.1" name="source:${esc(sid)}" value="${String(weight)}"/>` +
        `</label>`
    )
    .join("");

  return (
    `<form id="settings-form">` +
    `<fieldset><legend>score weights</legend>` +
    `<label>polarity <input type="range" id="wp" name="wp" min="0" max="1" step="0.01" value="${String(w_p)}"/></label>` +
    `<label>subjectivity <input type="range" id="ws" name="ws" min="0" max="1" step="0.01" value="${String(w_s)}"/></label>` +
    `<p class="normalized" id="normalized-pair">stored as w_p=${String(w_p)} w_s=${String(w_s)}</p>` +
    `</fieldset>` +
    `<fieldset><legend>source weights</legend>${sourceRows}</fieldset>` +
    `<label class="show-urls">` +
    `<input type="checkbox" id="show-urls" ${settings.show_urls ? "checked" : ""}/>` +
    ` show citation URLs</label>` +
    `<p class="form-error" id="settings-error" hidden></p>` +
    `<button type="submit">save</button>` +
    `</form>`
  );
}
