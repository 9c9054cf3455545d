// DOM wiring: transcript, input form, clusters panel, settings.
//
// One request is in flight at a time; the input is disabled while we
// wait.  The transcript is append-only and lives only in the page, so a
// reload starts a fresh conversation.

import { askQuestion, fetchClusters } from "./api.js";
import {
  renderClusters,
  renderClustersError,
  renderTurn,
  type ChatTurn,
} from "./render.js";
import { DEFAULT_TOP_K, loadTopK, saveTopK } from "./settings.js";

const transcript = document.getElementById("transcript") as HTMLElement;
const form = document.getElementById("ask-form") as HTMLFormElement;
const input = document.getElementById("question") as HTMLInputElement;
const sendButton = document.getElementById("send") as HTMLButtonElement;
const topKInput = document.getElementById("top-k") as HTMLInputElement;
const clustersToggle = document.getElementById("clusters-toggle") as HTMLButtonElement;
const clustersPanel = document.getElementById("clusters-panel") as HTMLElement;

let busy = false;
let clustersLoaded = false;

let topK = DEFAULT_TOP_K;
try {
  topK = loadTopK(window.localStorage);
} catch {
  // storage may be unavailable (private mode); keep the default
}
topKInput.value = String(topK);

topKInput.addEventListener("change", () => {
  const requested = Number.parseInt(topKInput.value, 10);
  try {
    topK = saveTopK(window.localStorage, requested);
  } catch {
    topK = Number.isInteger(requested) && requested >= 1 ? requested : DEFAULT_TOP_K;
  }
  topKInput.value = String(topK);
});

function setBusy(value: boolean): void {
  busy = value;
  input.disabled = value;
  sendButton.disabled = value;
}

function appendTurn(turn: ChatTurn): void {
  const wrapper = document.createElement("div");
  wrapper.className = "turn";
  wrapper.innerHTML = renderTurn(turn);
  transcript.appendChild(wrapper);
  transcript.scrollTop = transcript.scrollHeight;
}

async function send(question: string): Promise<void> {
  if (busy) return;
  setBusy(true);
  try {
    const outcome = await askQuestion(question, topK);
    appendTurn({ question, outcome, timestamp: new Date() });
  } finally {
    setBusy(false);
    input.focus();
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const question = input.value.trim();
  if (!question || busy) return;
  input.value = "";
  void send(question);
});

// Retry buttons inside error bubbles re-send the failed question.
transcript.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  if (target.matches("button.retry")) {
    const question = target.dataset.question ?? "";
    if (question) void send(question);
  }
});

clustersToggle.addEventListener("click", async () => {
  const hidden = clustersPanel.hasAttribute("hidden");
  if (!hidden) {
    clustersPanel.setAttribute("hidden", "");
    return;
  }
  clustersPanel.removeAttribute("hidden");
  if (clustersLoaded) return;
  clustersPanel.innerHTML = `<p class="clusters-loading">loading…</p>`;
  try {
    const clusters = await fetchClusters();
    clustersPanel.innerHTML = renderClusters(clusters);
    clustersLoaded = true;
  } catch (error) {
    clustersPanel.innerHTML = renderClustersError(
      `Could not load clusters: ${error instanceof Error ? error.message : "unknown error"}`,
    );
  }
});
