// Wire types for the /api/v1 surface, maintained by hand against the
// server's JSON output. The console never invents values of these
// shapes beyond request bodies; everything rendered comes back from
// the service.

export type ReportKind = "past" | "present" | "future" | "url";

export interface ScoreWeights {
  w_p: number;
  w_s: number;
}

export interface DateWindow {
  start: string; // YYYY-MM-DD
  end: string;
}

export interface AnalysisRequest {
  keyword: string;
  synonyms: string[];
  window: DateWindow;
  kind: ReportKind;
  url?: string;
  source_weights: Record<string, number>;
  score_weights: ScoreWeights;
  show_urls: boolean;
}

export interface Settings {
  score_weights: ScoreWeights;
  source_weights: Record<string, number>;
  show_urls: boolean;
}

export type JobState =
  | "queued"
  | "crawling"
  | "scoring"
  | "synthesizing"
  | "done"
  | "failed";

export interface JobEvent {
  state: JobState;
  at: string;
  step?: number;
  reason?: string;
}

export interface JobStatus {
  report_id: string;
  state: JobState;
  events: JobEvent[];
  step?: number;
  reason?: string;
}

export interface ChatAccepted {
  request: AnalysisRequest;
  report_id: string;
}

export interface Citation {
  claim_section: string;
  source_id: string;
  timestamp_confidence: string;
  url: string;
}

export interface Charts {
  sentiment_distribution: Record<string, number>;
  term_bars: [string, number][];
  trend: [string, number][];
}

export interface Forecast {
  model_id: "ma" | "ar" | "arima";
  params: Record<string, unknown>;
  horizon: number;
  predictions: number[];
  mse?: number;
}

export interface Report {
  id: string;
  created_at: string;
  request: AnalysisRequest;
  sections: Record<string, string>;
  citations: Citation[];
  charts: Charts;
  pipeline_trace: unknown[];
  forecast?: Forecast;
  risk_level?: string;
}

export interface ApiError {
  error: { code: string; message: string; report_id?: string };
}

// fixed rendering order for the eight report sections, matching the
// order the service writes them in report markdown
export const SECTION_ORDER = [
  "introduction",
  "summary",
  "cause_analysis",
  "risk_assessment",
  "policy_suggestions",
  "associated_words",
  "conclusion",
  "chart_data",
] as const;
