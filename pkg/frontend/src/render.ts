// HTML-string rendering of the session state. Pure functions so the whole
// surface can be asserted against the mock server without a DOM.

import type { UiSession } from "./state.js";
import { canAsk } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderBanner(s: UiSession): string {
  if (!s.banner) return "";
  const retry = s.banner.retryable
    ? '<button class="retry" data-action="retry-upload">Retry</button>'
    : "";
  return `<div class="banner banner-${s.banner.kind}">${escapeHtml(s.banner.message)}${retry}</div>`;
}

export function renderStats(s: UiSession): string {
  if (!s.stats) return "";
  const { sentences, nodes, edges, digest_ms } = s.stats;
  return (
    `<div class="stats">${sentences} sentences · ${nodes} nodes · ` +
    `${edges} edges · digested in ${Math.round(digest_ms)} ms</div>`
  );
}

export function renderSummary(s: UiSession): string {
  if (s.summary.length === 0) return "";
  const rows = s.summary
    .map(
      (item) =>
        `<li class="summary-item"><span class="sid-badge">${item.sid}</span>` +
        `${escapeHtml(item.text)}</li>`,
    )
    .join("");
  return `<section class="summary"><h2>Summary</h2><ol>${rows}</ol></section>`;
}

export function renderChips(s: UiSession): string {
  if (s.keyphrases.length === 0) return "";
  const chips = s.keyphrases
    .map(
      (p) =>
        `<button class="chip" data-action="chip" data-surface="${escapeHtml(p.surface)}" ` +
        `title="score ${p.score.toFixed(6)}">${escapeHtml(p.surface)}</button>`,
    )
    .join("");
  return `<section class="keyphrases"><h2>Keyphrases</h2>${chips}</section>`;
}

export function renderTranscript(s: UiSession): string {
  const turns = s.transcript
    .map((turn) => {
      const answers =
        turn.items.length === 0
          ? '<li class="no-match">no relevant sentences</li>'
          : turn.items
              .map(
                (item) =>
                  `<li class="answer"><span class="sid-badge">${item.sid}</span>` +
                  `${escapeHtml(item.text)}` +
                  `<span class="score">${item.score.toFixed(4)}</span></li>`,
              )
              .join("");
      return `<div class="turn"><div class="query">${escapeHtml(turn.query)}</div><ul>${answers}</ul></div>`;
    })
    .join("");
  return `<section class="transcript">${turns}</section>`;
}

export function renderAskForm(s: UiSession): string {
  const disabled = canAsk(s) ? "" : " disabled";
  const inputDisabled = s.phase === "ready" && !s.asking ? "" : " disabled";
  return (
    `<form class="ask" data-action="ask">` +
    `<input type="text" name="q" placeholder="Ask about the document…" ` +
    `value="${escapeHtml(s.queryDraft)}"${inputDisabled}>` +
    `<button type="submit"${disabled}>Ask</button></form>`
  );
}

export function renderApp(s: UiSession): string {
  const upload =
    `<form class="upload" data-action="upload">` +
    `<input type="file" name="conllu" accept=".conllu,.txt">` +
    `<button type="submit">Upload</button></form>`;
  const dashboard =
    s.phase === "ready"
      ? renderStats(s) + renderSummary(s) + renderChips(s) + renderTranscript(s) + renderAskForm(s)
      : "";
  return `<main>${upload}${renderBanner(s)}${dashboard}</main>`;
}
