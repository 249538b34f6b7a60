// Render functions: state in, HTML string out. No language facts are
// computed here; everything shown comes from state filled by service
// responses. Segment markup is styling only, so copying a witness out of the
// DOM reproduces the exact string.

import type { ExplorerState, StringEntry } from "./state.js";
import { PUMP_EXPONENT_MAX } from "./state.js";

export const EPSILON_CHAR = "e";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function displayString(value: string): string {
  return value === "" ? EPSILON_CHAR : value;
}

function errorBanner(state: ExplorerState): string {
  if (state.error === null) {
    return "";
  }
  const { message, position, retryable } = state.error;
  const where = position !== null ? ` (position ${position})` : "";
  const retry = retryable
    ? '<button class="retry" data-action="retry">Retry</button>'
    : "";
  return `<div class="error" role="alert">${escapeHtml(message)}${where}${retry}</div>`;
}

export function renderMembership(state: ExplorerState): string {
  const parts = [errorBanner(state)];
  if (state.lastVerdict !== null) {
    const word = state.lastVerdict ? "True" : "False";
    parts.push(`<p class="verdict verdict-${word.toLowerCase()}">${word}</p>`);
  }
  return parts.join("");
}

function stringItem(entry: StringEntry): string {
  const cls = entry.epsilon ? "lang-string epsilon" : "lang-string";
  return `<li class="${cls}">${escapeHtml(displayString(entry.value))}</li>`;
}

export function renderStrings(state: ExplorerState): string {
  const items = state.stringPage.entries.map(stringItem).join("");
  const disabled = state.stringPage.exhausted ? " disabled" : "";
  const note = state.stringPage.exhausted
    ? '<p class="note">Every string of the language is listed.</p>'
    : "";
  return [
    errorBanner(state),
    `<ol class="string-list">${items}</ol>`,
    note,
    `<button data-action="get-strings"${disabled}>Get Strings</button>`,
  ].join("");
}

function splitSegments(state: ExplorerState): string {
  const split = state.mpl.split;
  if (split === null) {
    return "";
  }
  // Three adjacent spans; concatenated text content equals the witness.
  return (
    '<span class="split">' +
    `<span class="seg seg-x">${escapeHtml(split.x)}</span>` +
    `<span class="seg seg-y">${escapeHtml(split.y)}</span>` +
    `<span class="seg seg-z">${escapeHtml(split.z)}</span>` +
    "</span>"
  );
}

export function renderPumping(state: ExplorerState): string {
  const parts = [errorBanner(state)];
  const view = state.mpl;
  if (view.p === null) {
    parts.push('<button data-action="get-min-pump">Get Min Pump</button>');
    return parts.join("");
  }
  parts.push(`<p class="mpl">Minimum pumping length: <strong>${view.p}</strong></p>`);
  if (view.witness !== null) {
    parts.push(
      `<p class="witness">Witness: <code>${escapeHtml(view.witness)}</code> ` +
        `split as ${splitSegments(state)}</p>`,
    );
  } else {
    parts.push('<p class="witness">No language string reaches that length.</p>');
  }
  if (view.p > 1 && view.counterexample !== null) {
    parts.push(
      `<p class="counterexample">At length ${view.p - 1} the string ` +
        `<code>${escapeHtml(view.counterexample)}</code> has no valid split: ` +
        "every candidate section stops pumping.</p>",
    );
  }
  if (view.witness !== null) {
    parts.push(
      '<label>pump count i <input type="range" data-action="pump-slider" ' +
        `min="0" max="${PUMP_EXPONENT_MAX}" value="${view.pumpExponent}"></label>`,
    );
    if (view.pumped !== null && view.pumpedMember !== null) {
      const word = view.pumpedMember ? "True" : "False";
      parts.push(
        `<p class="pumped">i=${view.pumpExponent}: ` +
          `<code>${escapeHtml(displayString(view.pumped))}</code> ` +
          `member=<span class="verdict-${word.toLowerCase()}">${word}</span></p>`,
      );
    }
  }
  parts.push('<button data-action="get-min-pump">Get Min Pump</button>');
  return parts.join("");
}

export function renderActiveView(state: ExplorerState): string {
  switch (state.activeView) {
    case "membership":
      return renderMembership(state);
    case "strings":
      return renderStrings(state);
    case "pumping":
      return renderPumping(state);
  }
}

/** Text content of an HTML fragment, tags stripped, entities restored. */
export function textContent(html: string): string {
  return html
    .replace(/<[^>]*>/g, "")
    .replace(/&lt;/g, "<")
    .replace(/&gt;/g, ">")
    .replace(/&quot;/g, '"')
    .replace(/&amp;/g, "&");
}
