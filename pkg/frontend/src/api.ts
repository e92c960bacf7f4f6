/**
 * Typed client for the advisor HTTP JSON API.
 *
 * The client is a thin transport layer: every computation (dominance,
 * trade-offs, filtering) happens server-side and this module only moves
 * documents around.  `fetch` is injectable so tests can mock the server.
 */

export interface ContextInfo {
  name: string;
  instance: number;
  metrics: string[];
}

export interface CatalogInfo {
  catalog_id: string;
  categories: { id: string; count: number }[];
  fingerprint: string;
}

export interface FrontRow {
  solution: number;
  apps: string[];
  objectives: Record<string, number>;
  display: Record<string, number>;
  tradeoff_pct: Record<string, number>;
}

export interface FrontDoc {
  instance: number;
  metrics: string[];
  solver: string;
  catalog_fingerprint: string;
  front: FrontRow[];
  stats: Record<string, number>;
  seed?: number;
  empty_selection?: boolean;
}

export interface JobStatus {
  job_id: string;
  status: "pending" | "running" | "done" | "failed";
  front_id?: string;
  error?: string;
}

export interface Constraint {
  metric: string;
  field: "value" | "display" | "tradeoff";
  op: "<=" | ">=";
  bound: number;
}

export interface CompareDoc {
  instance: number;
  baseline: { apps: string[]; objectives: Record<string, number> };
  solutions: {
    solution: number;
    apps: string[];
    improvement_pct: Record<string, number | null>;
  }[];
}

export type FetchLike = (
  url: string,
  init?: { method?: string; body?: string; headers?: Record<string, string> },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

export class AdvisorApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(
    path: string,
    init?: { method?: string; body?: string; headers?: Record<string, string> },
  ): Promise<T> {
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    const doc = (await resp.json()) as Record<string, unknown>;
    if (!resp.ok) {
      const detail = typeof doc?.detail === "string" ? doc.detail : `HTTP ${resp.status}`;
      throw new ApiError(resp.status, detail);
    }
    return doc as T;
  }

  uploadCatalog(csv: string): Promise<CatalogInfo> {
    return this.request("/catalog", {
      method: "POST",
      body: csv,
      headers: { "content-type": "text/csv" },
    });
  }

  contexts(): Promise<ContextInfo[]> {
    return this.request("/contexts");
  }

  startSolve(
    catalogId: string,
    instance: number,
    solver: "exhaustive" | "nsga2" = "exhaustive",
  ): Promise<JobStatus> {
    return this.request("/solve", {
      method: "POST",
      body: JSON.stringify({ catalog_id: catalogId, instance, solver }),
      headers: { "content-type": "application/json" },
    });
  }

  jobStatus(jobId: string): Promise<JobStatus> {
    return this.request(`/jobs/${jobId}`);
  }

  /** Poll a job until it settles; rejects if it fails or times out. */
  async waitForJob(
    jobId: string,
    opts: { intervalMs?: number; timeoutMs?: number; sleep?: (ms: number) => Promise<void> } = {},
  ): Promise<JobStatus> {
    const interval = opts.intervalMs ?? 150;
    const timeout = opts.timeoutMs ?? 60_000;
    const sleep = opts.sleep ?? ((ms) => new Promise((r) => setTimeout(r, ms)));
    const deadline = Date.now() + timeout;
    for (;;) {
      const job = await this.jobStatus(jobId);
      if (job.status === "done") return job;
      if (job.status === "failed") throw new ApiError(500, job.error ?? "solve failed");
      if (Date.now() >= deadline) throw new ApiError(408, `job ${jobId} timed out`);
      await sleep(interval);
    }
  }

  front(frontId: string): Promise<FrontDoc> {
    return this.request(`/fronts/${frontId}`);
  }

  filterFront(frontId: string, constraints: Constraint[]): Promise<FrontDoc> {
    return this.request(`/fronts/${frontId}/filter`, {
      method: "POST",
      body: JSON.stringify({ constraints }),
      headers: { "content-type": "application/json" },
    });
  }

  compare(catalogId: string, instance: number): Promise<CompareDoc> {
    return this.request(`/catalogs/${catalogId}/compare`, {
      method: "POST",
      body: JSON.stringify({ instance }),
      headers: { "content-type": "application/json" },
    });
  }
}
