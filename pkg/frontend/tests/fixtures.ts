/** Mock server documents used by the explorer tests. */

import type { ContextInfo, FrontDoc, FrontRow } from "../src/api.js";

// Published travel-abroad front: battery life (h), network (MB), and the
// two sacrifice percentages, as served by the backend.
const TRAVEL_ROWS: [number, number, number, number][] = [
  [3.38, 0.31, 0.0, 83.88],
  [3.36, 0.25, 0.71, 64.3],
  [3.36, 0.23, 0.83, 57.54],
  [3.34, 0.22, 1.36, 54.6],
  [3.34, 0.18, 1.36, 42.7],
  [3.33, 0.17, 1.53, 37.96],
  [3.32, 0.17, 1.81, 37.45],
  [3.31, 0.16, 2.05, 35.02],
  [3.31, 0.12, 2.05, 23.12],
  [3.31, 0.12, 2.33, 22.61],
  [3.29, 0.12, 2.69, 22.35],
  [3.26, 0.11, 3.61, 20.24],
  [3.25, 0.11, 3.89, 19.72],
  [3.24, 0.11, 4.23, 19.47],
  [3.18, 0.11, 5.92, 19.42],
  [3.14, 0.11, 7.1, 18.54],
  [3.14, 0.11, 7.35, 18.03],
  [3.13, 0.1, 7.56, 15.6],
  [3.13, 0.06, 7.56, 3.7],
  [3.12, 0.06, 7.81, 3.18],
  [3.11, 0.06, 8.13, 2.92],
  [3.08, 0.05, 8.96, 0.82],
  [3.07, 0.05, 9.2, 0.3],
  [3.06, 0.05, 9.5, 0.04],
  [3.03, 0.05, 10.44, 0.04],
  [3.01, 0.05, 11.02, 0.0],
  [2.98, 0.05, 11.92, 0.0],
];

export const CONTEXTS: ContextInfo[] = [
  { name: "driving-plugged", instance: 22, metrics: ["cpu", "memory", "network"] },
  { name: "driving-unplugged", instance: 1, metrics: ["power"] },
  { name: "old-devices", instance: 10, metrics: ["cpu", "memory"] },
  { name: "travel-abroad", instance: 8, metrics: ["power", "network"] },
];

export function travelFrontRows(): FrontRow[] {
  return TRAVEL_ROWS.map(([battery, network, tBattery, tNetwork], i) => ({
    solution: i + 1,
    apps: [`nav-${i + 1}`, `chat-${i + 1}`, `mail-${i + 1}`],
    objectives: { power: 7.98 / battery, network },
    display: { battery_h: battery, network },
    tradeoff_pct: { power: tBattery, network: tNetwork },
  }));
}

export function travelFrontDoc(): FrontDoc {
  return {
    instance: 8,
    metrics: ["power", "network"],
    solver: "exhaustive",
    catalog_fingerprint: "f".repeat(64),
    front: travelFrontRows(),
    stats: { space_before: 15459444, space_after: 120, evaluated: 120 },
  };
}

export const SAMPLE_CSV =
  "app_id,category,rating,power_w,cpu_pct,mem_mb,net_mb\n" +
  "nav-1,nav,4.5,2.0,12.0,120.0,0.8\n" +
  "chat-1,chat,4.8,0.9,5.0,80.0,0.4\n";

/**
 * In-memory fake of the advisor service, implementing the same routes the
 * real backend serves.  Filtering mirrors the server contract: it subsets
 * by the precomputed trade-off percentages it already returned.
 */
export function mockServer() {
  const solveRequests: { catalog_id: string; instance: number; solver: string }[] = [];
  const doc = travelFrontDoc();

  const fetchImpl = async (
    url: string,
    init?: { method?: string; body?: string },
  ): Promise<{ ok: boolean; status: number; json(): Promise<unknown> }> => {
    const respond = (status: number, body: unknown) => ({
      ok: status < 400,
      status,
      json: async () => body,
    });
    const path = url.replace(/^https?:\/\/[^/]+/, "");

    if (path === "/contexts") return respond(200, CONTEXTS);
    if (path === "/catalog") {
      return respond(200, {
        catalog_id: "cat-1",
        categories: [{ id: "nav", count: 1 }, { id: "chat", count: 1 }],
        fingerprint: "f".repeat(64),
      });
    }
    if (path === "/solve") {
      const payload = JSON.parse(init?.body ?? "{}");
      solveRequests.push(payload);
      return respond(202, { job_id: `job-${solveRequests.length}`, status: "pending" });
    }
    if (path.startsWith("/jobs/")) {
      return respond(200, { job_id: path.slice(6), status: "done", front_id: "front-1" });
    }
    if (path === "/fronts/front-1" && (init?.method ?? "GET") === "GET") {
      return respond(200, doc);
    }
    if (path === "/fronts/front-1/filter") {
      const payload = JSON.parse(init?.body ?? "{}") as {
        constraints: { metric: string; field: string; op: string; bound: number }[];
      };
      let rows = doc.front;
      for (const c of payload.constraints) {
        if (c.field !== "tradeoff" || (c.op !== "<=" && c.op !== ">=")) {
          return respond(422, { detail: `unsupported constraint ${JSON.stringify(c)}` });
        }
        rows = rows.filter((r) =>
          c.op === "<="
            ? r.tradeoff_pct[c.metric] <= c.bound
            : r.tradeoff_pct[c.metric] >= c.bound,
        );
      }
      return respond(200, { ...doc, front: rows, empty_selection: rows.length === 0 });
    }
    return respond(404, { detail: `no mock for ${path}` });
  };

  return { fetchImpl, solveRequests };
}
