// Single store for all console state. Every mutation funnels through
// update(), so views observe one consistent snapshot per change and
// concurrent job events can never interleave half-applied.

import {
  AnalysisRequest,
  ChatAccepted,
  JobEvent,
  JobStatus,
  Report,
  Settings,
} from "./api-types.js";
import { ApiRequestError } from "./client.js";

export type EntryStatus = JobStatus["state"] | "sending" | "rejected";

export interface ConversationEntry {
  id: number;
  text: string;
  status: EntryStatus;
  step?: number;
  reportId?: string;
  request?: AnalysisRequest;
  error?: string;
}

export interface ConsoleState {
  conversation: ConversationEntry[];
  settings: Settings | null;
  report: Report | null;
  reportError: string | null;
}

// what the store needs from the network layer; ApiClient satisfies it,
// tests hand in stubs
export interface ConsoleClient {
  chat(message: string): Promise<ChatAccepted>;
  getReport(id: string): Promise<Report>;
  getSettings(): Promise<Settings>;
  putSettings(patch: Partial<Settings>): Promise<Settings>;
  watchJob(
    id: string,
    onEvent: (e: JobEvent) => void,
    signal?: AbortSignal
  ): Promise<JobStatus["state"]>;
}

type Listener = (state: ConsoleState) => void;

export class ConsoleStore {
  private readonly client: ConsoleClient;
  private readonly listeners = new Set<Listener>();
  private nextId = 1;

  // fetched reports by id, so chat bubbles can show thumbnails without
  // refetching when a report is reopened
  readonly reportCache = new Map<string, Report>();

  state: ConsoleState = {
    conversation: [],
    settings: null,
    report: null,
    reportError: null,
  };

  constructor(client: ConsoleClient) {
    this.client = client;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private update(mutate: (state: ConsoleState) => void): void {
    mutate(this.state);
    for (const listener of this.listeners) listener(this.state);
  }

  private entry(id: number): ConversationEntry | undefined {
    return this.state.conversation.find((e) => e.id === id);
  }

  async loadSettings(): Promise<void> {
    const settings = await this.client.getSettings();
    this.update((s) => {
      s.settings = settings;
    });
  }

  /** PUT a settings patch; the snapshot becomes the server's echo. */
  async saveSettings(patch: Partial<Settings>): Promise<Settings> {
    const echoed = await this.client.putSettings(patch);
    this.update((s) => {
      s.settings = echoed;
    });
    return echoed;
  }

  /**
   * Send a chat message and follow the produced job to its terminal
   * state. Resolves once the entry stops changing; rejections (422 and
   * friends) land on the entry as an inline error, not an exception.
   */
  async sendMessage(text: string): Promise<ConversationEntry> {
    const id = this.nextId++;
    this.update((s) => {
      s.conversation.push({ id, text, status: "sending" });
    });

    let accepted: ChatAccepted;
    try {
      accepted = await this.client.chat(text);
    } catch (err) {
      const message =
        err instanceof ApiRequestError ? err.message : "request failed";
      this.update(() => {
        const entry = this.entry(id);
        if (entry) {
          entry.status = "rejected";
          entry.error = message;
        }
      });
      return this.entry(id)!;
    }

    this.update(() => {
      const entry = this.entry(id);
      if (entry) {
        entry.reportId = accepted.report_id;
        entry.request = accepted.request;
        entry.status = "queued";
      }
    });

    await this.client.watchJob(accepted.report_id, (event) => {
      this.update(() => {
        const entry = this.entry(id);
        if (entry) {
          entry.status = event.state;
          entry.step = event.step;
          if (event.reason) entry.error = event.reason;
        }
      });
    });
    return this.entry(id)!;
  }

  async openReport(reportId: string): Promise<void> {
    try {
      const cached = this.reportCache.get(reportId);
      const report = cached ?? (await this.client.getReport(reportId));
      this.reportCache.set(reportId, report);
      this.update((s) => {
        s.report = report;
        s.reportError = null;
      });
    } catch (err) {
      const message =
        err instanceof ApiRequestError ? err.message : "report unavailable";
      this.update((s) => {
        s.reportError = message;
      });
    }
  }

  closeReport(): void {
    this.update((s) => {
      s.report = null;
      s.reportError = null;
    });
  }
}
