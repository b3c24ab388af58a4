// Entry point: build the two-pane layout, wire events, keep the DOM in
// step with the store.

import { ApiClient } from "./client.js";
import { ConsoleStore } from "./store.js";
import {
  normalizedPair,
  renderConversation,
  renderReportView,
  renderSettingsForm,
} from "./views.js";

const app = document.querySelector<HTMLElement>("#app");
if (app) boot(app);

type Panel = "report" | "settings";

function boot(root: HTMLElement): void {
  const store = new ConsoleStore(new ApiClient());
  let panel: Panel = "report";

  root.innerHTML = `
    <div class="layout">
      <section class="chat-pane">
        <div id="conversation"></div>
        <form id="chat-form" autocomplete="off">
          <input id="chat-input" type="text" placeholder="describe the report you need"/>
          <button type="submit">send</button>
        </form>
      </section>
      <section class="side-pane">
        <nav>
          <button id="nav-report" class="active">report</button>
          <button id="nav-settings">settings</button>
        </nav>
        <div id="panel"></div>
      </section>
    </div>`;

  const conversation = root.querySelector<HTMLElement>("#conversation")!;
  const panelHost = root.querySelector<HTMLElement>("#panel")!;
  const chatForm = root.querySelector<HTMLFormElement>("#chat-form")!;
  const chatInput = root.querySelector<HTMLInputElement>("#chat-input")!;

  function render(): void {
    conversation.innerHTML = renderConversation(
      store.state.conversation,
      store.reportCache
    );
    conversation.scrollTop = conversation.scrollHeight;
    panelHost.innerHTML =
      panel === "settings"
        ? renderSettingsForm(store.state.settings)
        : renderReportView(
            store.state.report,
            store.state.settings,
            store.state.reportError
          );
    root.querySelector("#nav-report")?.classList.toggle("active", panel === "report");
    root
      .querySelector("#nav-settings")
      ?.classList.toggle("active", panel === "settings");
  }

  store.subscribe(render);
  render();
  void store.loadSettings();

  chatForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const text = chatInput.value.trim();
    if (!text) return;
    chatInput.value = "";
    void store.sendMessage(text).then((entry) => {
      if (entry.status === "done" && entry.reportId) {
        panel = "report";
        return store.openReport(entry.reportId);
      }
    });
  });

  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.id === "nav-report") {
      panel = "report";
      render();
    } else if (target.id === "nav-settings") {
      panel = "settings";
      render();
    } else if (target.classList.contains("open-report")) {
      const id = target.dataset.report;
      if (id) {
        panel = "report";
        void store.openReport(id);
      }
    }
  });

  // settings interactions are delegated because the form re-renders
  root.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement;
    if (target.id !== "wp" && target.id !== "ws") return;
    const wp = Number(root.querySelector<HTMLInputElement>("#wp")?.value ?? 0);
    const ws = Number(root.querySelector<HTMLInputElement>("#ws")?.value ?? 0);
    const display = root.querySelector<HTMLElement>("#normalized-pair");
    if (!display) return;
    const pair = normalizedPair(wp, ws);
    display.textContent = pair
      ? `stored as w_p=${pair.w_p} w_s=${pair.w_s}`
      : "weights cannot both be zero";
  });

  root.addEventListener("submit", (event) => {
    const form = event.target as HTMLElement;
    if (form.id !== "settings-form") return;
    event.preventDefault();
    void submitSettings(root, store);
  });
}

async function submitSettings(root: HTMLElement, store: ConsoleStore): Promise<void> {
  const wp = Number(root.querySelector<HTMLInputElement>("#wp")?.value ?? 0);
  const ws = Number(root.querySelector<HTMLInputElement>("#ws")?.value ?? 0);
  const errorBox = root.querySelector<HTMLElement>("#settings-error");

  if (normalizedPair(wp, ws) === null) {
    if (errorBox) {
      errorBox.textContent = "score weights cannot both be zero";
      errorBox.hidden = false;
    }
    return; // invalid form never reaches the network
  }

  const sourceWeights: Record<string, number> = {};
  for (const input of root.querySelectorAll<HTMLInputElement>(
    "#settings-form input[name^='source:']"
  )) {
    sourceWeights[input.name.slice("source:".length)] = Number(input.value);
  }
  const showUrls =
    root.querySelector<HTMLInputElement>("#show-urls")?.checked ?? true;

  try {
    await store.saveSettings({
      score_weights: { w_p: wp, w_s: ws },
      source_weights: sourceWeights,
      show_urls: showUrls,
    });
  } catch (err) {
    if (errorBox) {
      errorBox.textContent = err instanceof Error ? err.message : "save failed";
      errorBox.hidden = false;
    }
  }
}
