/** HTML-string renderers for the explorer views (framework-free). */

import type { ContextInfo } from "./api.js";
import type { BarVM, DetailVM, TableRowVM } from "./viewmodel.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderContextButtons(contexts: ContextInfo[]): string {
  const buttons = contexts
    .map(
      (c) =>
        `<button class="context" data-context="${esc(c.name)}" ` +
        `data-instance="${c.instance}">${esc(c.name)} ` +
        `<small>(${c.metrics.map(esc).join(", ")})</small></button>`,
    )
    .join("\n");
  return `<nav class="contexts">\n${buttons}\n</nav>`;
}

export function renderTable(rows: TableRowVM[]): string {
  if (rows.length === 0) {
    return `<p class="empty">No solution satisfies the current constraints.</p>`;
  }
  const header = rows[0].cells
    .map((c) => `<th>${esc(c.displayName)}</th><th>sacrifice</th>`)
    .join("");
  const body = rows
    .map((row) => {
      const cells = row.cells
        .map(
          (c) =>
            `<td>${esc(c.text)}</td><td>${c.tradeoffPct.toFixed(2)}%</td>`,
        )
        .join("");
      return (
        `<tr class="front-row" data-solution="${row.solution}">` +
        `<td>${row.solution}</td><td>${esc(row.apps.join(", "))}</td>${cells}</tr>`
      );
    })
    .join("\n");
  return (
    `<table class="front">\n<thead><tr><th>#</th><th>apps</th>${header}</tr></thead>\n` +
    `<tbody>\n${body}\n</tbody>\n</table>`
  );
}

export function renderBars(bars: BarVM[]): string {
  const rows = bars
    .map((bar) => {
      const segments = bar.segments
        .map(
          (s) =>
            `<span class="segment segment-${esc(s.metric)}" ` +
            `style="width:${(s.widthFraction * 100).toFixed(2)}%" ` +
            `title="${esc(s.metric)}: ${s.tradeoffPct.toFixed(2)}%"></span>`,
        )
        .join("");
      return `<div class="bar" data-solution="${bar.solution}">${segments}</div>`;
    })
    .join("\n");
  return `<div class="bars">\n${rows}\n</div>`;
}

export function renderDetail(detail: DetailVM | null): string {
  if (!detail) return `<aside class="detail empty">Select a solution.</aside>`;
  const apps = detail.apps.map((a) => `<li>${esc(a)}</li>`).join("");
  const lines = detail.lines
    .map(
      (l) =>
        `<dt>${esc(l.label)}</dt><dd>${esc(l.value)} ` +
        `<small>sacrifice ${esc(l.tradeoff)}</small></dd>`,
    )
    .join("");
  return (
    `<aside class="detail" data-solution="${detail.solution}">` +
    `<h2>Solution ${detail.solution}</h2><ul>${apps}</ul><dl>${lines}</dl></aside>`
  );
}

export function renderSlider(metric: string, bound: number): string {
  return (
    `<label class="slider">max ${esc(metric)} sacrifice ` +
    `<input type="range" min="0" max="100" step="1" value="${bound}" ` +
    `data-metric="${esc(metric)}"/> <output>${bound}%</output></label>`
  );
}
