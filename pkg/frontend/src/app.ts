/**
 * Explorer controller: wires the API client to a view, DOM-free.
 *
 * The controller keeps only presentation state (current front id, selected
 * row, slider bound).  Filtering always goes back to the server — the
 * client never recomputes trade-offs or dominance.
 */

import { AdvisorApi, type ContextInfo, type FrontDoc } from "./api.js";
import {
  renderBars,
  renderContextButtons,
  renderDetail,
  renderSlider,
  renderTable,
} from "./render.js";
import { detailPane, stackedBars, tableRows } from "./viewmodel.js";

export interface ExplorerView {
  showContexts(html: string): void;
  showFront(tableHtml: string, barsHtml: string, sliderHtml: string): void;
  showDetail(html: string): void;
  showError(message: string): void;
}

/** Metric whose sacrifice the slider limits: the last minimized objective. */
export function sliderMetric(doc: FrontDoc): string {
  const minimized = doc.metrics.filter((m) => m !== "rating");
  return minimized.length > 0
    ? minimized[minimized.length - 1]
    : doc.metrics[doc.metrics.length - 1];
}

export class ExplorerController {
  private contexts: ContextInfo[] = [];
  private catalogId: string | null = null;
  private frontId: string | null = null;
  private fullFront: FrontDoc | null = null;
  private currentFront: FrontDoc | null = null;
  private bound = 100;

  constructor(
    private readonly api: AdvisorApi,
    private readonly view: ExplorerView,
  ) {}

  async init(catalogCsv: string): Promise<void> {
    try {
      this.contexts = await this.api.contexts();
      this.view.showContexts(renderContextButtons(this.contexts));
      const catalog = await this.api.uploadCatalog(catalogCsv);
      this.catalogId = catalog.catalog_id;
    } catch (err) {
      this.view.showError(String(err));
    }
  }

  /** Instance the given context button issues (exposed for tests). */
  instanceFor(contextName: string): number {
    const ctx = this.contexts.find((c) => c.name === contextName);
    if (!ctx) throw new Error(`unknown context ${contextName}`);
    return ctx.instance;
  }

  async selectContext(contextName: string): Promise<void> {
    if (!this.catalogId) {
      this.view.showError("no catalog uploaded");
      return;
    }
    try {
      const instance = this.instanceFor(contextName);
      const job = await this.api.startSolve(this.catalogId, instance);
      const done = await this.api.waitForJob(job.job_id, { intervalMs: 10 });
      if (!done.front_id) throw new Error("job finished without a front");
      this.frontId = done.front_id;
      this.fullFront = await this.api.front(done.front_id);
      this.currentFront = this.fullFront;
      this.bound = 100;
      this.renderFront();
    } catch (err) {
      this.view.showError(String(err));
    }
  }

  /** Slider handler: ask the server for the subset within the bound. */
  async setSacrificeBound(bound: number): Promise<void> {
    if (!this.frontId || !this.fullFront) return;
    this.bound = bound;
    try {
      if (bound >= 100) {
        this.currentFront = this.fullFront;
      } else {
        this.currentFront = await this.api.filterFront(this.frontId, [
          {
            metric: sliderMetric(this.fullFront),
            field: "tradeoff",
            op: "<=",
            bound,
          },
        ]);
      }
      this.renderFront();
    } catch (err) {
      this.view.showError(String(err));
    }
  }

  selectRow(solution: number): void {
    if (!this.currentFront) return;
    this.view.showDetail(renderDetail(detailPane(this.currentFront, solution)));
  }

  visibleRowCount(): number {
    return this.currentFront?.front.length ?? 0;
  }

  private renderFront(): void {
    if (!this.currentFront || !this.fullFront) return;
    this.view.showFront(
      renderTable(tableRows(this.currentFront)),
      renderBars(stackedBars(this.currentFront)),
      renderSlider(sliderMetric(this.fullFront), this.bound),
    );
  }
}
