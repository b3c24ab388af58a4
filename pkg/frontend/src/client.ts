// Thin fetch wrapper over the service API plus the event-stream reader.
// The console is a pure client: every number and string it shows comes
// out of these calls.

import {
  ApiError,
  ChatAccepted,
  JobEvent,
  JobStatus,
  Report,
  Settings,
} from "./api-types.js";

export class ApiRequestError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

async function throwFromResponse(response: Response): Promise<never> {
  let code = "UpstreamError";
  let message = `HTTP ${response.status}`;
  try {
    const body = (await response.json()) as ApiError;
    code = body.error.code;
    message = body.error.message;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiRequestError(response.status, code, message);
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  if (!response.ok) await throwFromResponse(response);
  return (await response.json()) as T;
}

const TERMINAL = new Set(["done", "failed"]);

export class ApiClient {
  readonly base: string;

  constructor(base = "") {
    // "" means same-origin, the normal case when served under /console/
    this.base = base.replace(/\/$/, "");
  }

  async chat(message: string): Promise<ChatAccepted> {
    const response = await fetch(`${this.base}/api/v1/chat`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ message }),
    });
    if (!response.ok) await throwFromResponse(response);
    return (await response.json()) as ChatAccepted;
  }

  getReport(id: string): Promise<Report> {
    return getJson(`${this.base}/api/v1/reports/${id}`);
  }

  getStatus(id: string): Promise<JobStatus> {
    return getJson(`${this.base}/api/v1/reports/${id}/status`);
  }

  getSettings(): Promise<Settings> {
    return getJson(`${this.base}/api/v1/settings`);
  }

  async putSettings(patch: Partial<Settings>): Promise<Settings> {
    const response = await fetch(`${this.base}/api/v1/settings`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(patch),
    });
    if (!response.ok) await throwFromResponse(response);
    return (await response.json()) as Settings;
  }

  /**
   * Follow a job to its terminal state, invoking onEvent for every
   * transition. Prefers the SSE stream; if the stream drops mid-job the
   * tail is recovered by polling /status, so a network blip never
   * strands a conversation entry in a running state.
   */
  async watchJob(
    id: string,
    onEvent: (e: JobEvent) => void,
    signal?: AbortSignal
  ): Promise<JobState> {
    // count in a wrapper so events delivered before a mid-stream drop
    // still count; otherwise the poll below would replay them
    let delivered = 0;
    const counting = (event: JobEvent) => {
      delivered += 1;
      onEvent(event);
    };
    try {
      await this.streamEvents(id, counting, signal);
    } catch {
      // stream dropped; the poll recovers the tail
    }
    return this.pollToTerminal(id, delivered, onEvent, signal);
  }

  /** Read the SSE stream; returns how many events were delivered. */
  async streamEvents(
    id: string,
    onEvent: (e: JobEvent) => void,
    signal?: AbortSignal
  ): Promise<number> {
    const response = await fetch(`${this.base}/api/v1/reports/${id}/events`, {
      signal,
    });
    if (!response.ok) await throwFromResponse(response);
    if (!response.body) throw new Error("no response body");

    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    let count = 0;

    while (true) {
      const { value, done } = await reader.read();
      if (done) break;
      buffer += decoder.decode(value, { stream: true });
      const frames = buffer.split(/\r?\n\r?\n/);
      buffer = frames.pop() ?? "";
      for (const frame of frames) {
        for (const line of frame.split(/\r?\n/)) {
          if (!line.startsWith("data: ")) continue;
          const event = JSON.parse(line.slice(6)) as JobEvent;
          count += 1;
          onEvent(event);
        }
      }
    }
    return count;
  }

  private async pollToTerminal(
    id: string,
    alreadyDelivered: number,
    onEvent: (e: JobEvent) => void,
    signal?: AbortSignal
  ): Promise<JobState> {
    let seen = alreadyDelivered;
    while (true) {
      if (signal?.aborted) throw new Error("aborted");
      const status = await this.getStatus(id);
      for (const event of status.events.slice(seen)) {
        onEvent(event);
      }
      seen = Math.max(seen, status.events.length);
      if (TERMINAL.has(status.state)) return status.state;
      await sleep(150);
    }
  }
}

type JobState = JobStatus["state"];

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
