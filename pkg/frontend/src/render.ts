// Pure HTML renderers for the transcript and the clusters panel.
//
// Everything returns a string, so the rendering rules (bar widths,
// fallback text, error bubbles) are testable without a browser.

import type { Answer, AskOutcome, Cluster } from "./api.js";

export interface ChatTurn {
  question: string;
  outcome: AskOutcome;
  timestamp: Date;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

// 1.00 maps to a full-width bar; displayed to whole percent.
export function barWidthPercent(relevance: number): number {
  const clamped = Math.min(1, Math.max(0, relevance));
  return Math.round(clamped * 100);
}

export function formatTime(date: Date): string {
  const hh = String(date.getHours()).padStart(2, "0");
  const mm = String(date.getMinutes()).padStart(2, "0");
  return `${hh}:${mm}`;
}

export function renderAnswers(answers: Answer[]): string {
  const items = answers
    .map((answer) => {
      const pct = barWidthPercent(answer.relevance);
      return (
        `<li class="answer">` +
        `<div class="bar"><div class="bar-fill" style="width: ${pct}%"></div></div>` +
        `<span class="answer-pct">${pct}%</span>` +
        `<p class="answer-text">${escapeHtml(answer.text)}</p>` +
        `<span class="answer-doc">paragraph ${answer.doc_index}</span>` +
        `</li>`
      );
    })
    .join("");
  return `<ol class="answers">${items}</ol>`;
}

export function renderFallback(message: string): string {
  return `<p class="fallback">${escapeHtml(message)}</p>`;
}

export function renderError(message: string, question: string): string {
  return (
    `<div class="error">` +
    `<p>${escapeHtml(message)}</p>` +
    `<button type="button" class="retry" data-question="${escapeHtml(question)}">Retry</button>` +
    `</div>`
  );
}

export function renderTurn(turn: ChatTurn): string {
  const question =
    `<div class="bubble user">` +
    `<span class="time">${formatTime(turn.timestamp)}</span>` +
    `<p>${escapeHtml(turn.question)}</p>` +
    `</div>`;
  let reply: string;
  switch (turn.outcome.kind) {
    case "answers":
      reply = renderAnswers(turn.outcome.answers);
      break;
    case "fallback":
      reply = renderFallback(turn.outcome.message);
      break;
    case "error":
      reply = renderError(turn.outcome.message, turn.question);
      break;
  }
  return `${question}<div class="bubble bot">${reply}</div>`;
}

export function renderClusters(clusters: Cluster[], membersShown = 10): string {
  if (clusters.length === 0) {
    return `<p class="clusters-empty">No clusters in this model.</p>`;
  }
  const blocks = clusters
    .map((cluster) => {
      const members = cluster.members
        .slice(0, membersShown)
        .map(
          (m) =>
            `<li>${escapeHtml(m.stem)} <span class="membership">${m.membership.toFixed(2)}</span></li>`,
        )
        .join("");
      return (
        `<section class="cluster">` +
        `<h3>#${cluster.index} ${escapeHtml(cluster.center_stem)}</h3>` +
        `<ul>${members}</ul>` +
        `</section>`
      );
    })
    .join("");
  return `<div class="clusters">${blocks}</div>`;
}

export function renderClustersError(message: string): string {
  return `<p class="clusters-error">${escapeHtml(message)}</p>`;
}
