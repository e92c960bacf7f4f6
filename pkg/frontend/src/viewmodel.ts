/**
 * Pure view-model builders: turn API documents into render-ready rows.
 *
 * Deliberately no optimization math here — objectives, displays, and
 * trade-off percentages arrive precomputed from the server and are only
 * formatted for presentation.
 */

import type { FrontDoc, FrontRow } from "./api.js";

/** Unit shown after each display column. */
const DISPLAY_UNITS: Record<string, string> = {
  battery_h: "h",
  power: "W",
  cpu: "%",
  memory: "MB",
  network: "MB",
  rating: "",
};

export function formatDisplay(name: string, value: number): string {
  const unit = DISPLAY_UNITS[name] ?? "";
  const text = value.toFixed(2);
  return unit ? `${text} ${unit}` : text;
}

export interface TableCell {
  metric: string;
  displayName: string;
  text: string;
  tradeoffPct: number;
}

export interface TableRowVM {
  solution: number;
  apps: string[];
  cells: TableCell[];
}

/** Display-column names in metric order (battery_h replaces power). */
export function displayNames(doc: FrontDoc): string[] {
  if (doc.front.length === 0) return doc.metrics;
  const available = Object.keys(doc.front[0].display);
  return doc.metrics.map((m) =>
    m === "power" && available.includes("battery_h") ? "battery_h" : m,
  );
}

export function tableRows(doc: FrontDoc): TableRowVM[] {
  const names = displayNames(doc);
  return doc.front.map((row) => ({
    solution: row.solution,
    apps: row.apps,
    cells: doc.metrics.map((metric, j) => ({
      metric,
      displayName: names[j],
      text: formatDisplay(names[j], row.display[names[j]]),
      tradeoffPct: row.tradeoff_pct[metric],
    })),
  }));
}

export interface BarSegment {
  metric: string;
  tradeoffPct: number;
  /** Width share of this segment within its row, 0..1 over a 100%-per-metric scale. */
  widthFraction: number;
}

export interface BarVM {
  solution: number;
  segments: BarSegment[];
}

/** Stacked sacrifice bars: one segment per objective, sized by trade-off %. */
export function stackedBars(doc: FrontDoc): BarVM[] {
  const span = doc.metrics.length * 100;
  return doc.front.map((row) => ({
    solution: row.solution,
    segments: doc.metrics.map((metric) => ({
      metric,
      tradeoffPct: row.tradeoff_pct[metric],
      widthFraction: row.tradeoff_pct[metric] / span,
    })),
  }));
}

export interface DetailVM {
  solution: number;
  apps: string[];
  lines: { label: string; value: string; tradeoff: string }[];
}

export function detailPane(doc: FrontDoc, solution: number): DetailVM | null {
  const row = doc.front.find((r: FrontRow) => r.solution === solution);
  if (!row) return null;
  const names = displayNames(doc);
  return {
    solution: row.solution,
    apps: row.apps,
    lines: doc.metrics.map((metric, j) => ({
      label: names[j],
      value: formatDisplay(names[j], row.display[names[j]]),
      tradeoff: `${row.tradeoff_pct[metric].toFixed(2)}%`,
    })),
  };
}
