/** Browser entry point: binds the controller to the page. */

import { AdvisorApi } from "./api.js";
import { ExplorerController, type ExplorerView } from "./app.js";

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id} element`);
  return el;
}

export function mount(baseUrl: string, catalogCsv: string): ExplorerController {
  const view: ExplorerView = {
    showContexts: (html) => {
      byId("contexts").innerHTML = html;
    },
    showFront: (tableHtml, barsHtml, sliderHtml) => {
      byId("front").innerHTML = tableHtml;
      byId("bars").innerHTML = barsHtml;
      byId("slider").innerHTML = sliderHtml;
    },
    showDetail: (html) => {
      byId("detail").innerHTML = html;
    },
    showError: (message) => {
      byId("error").textContent = message;
    },
  };

  const controller = new ExplorerController(new AdvisorApi(baseUrl), view);

  byId("contexts").addEventListener("click", (ev) => {
    const button = (ev.target as HTMLElement).closest<HTMLElement>("button.context");
    if (button?.dataset.context) void controller.selectContext(button.dataset.context);
  });
  byId("slider").addEventListener("input", (ev) => {
    const input = ev.target as HTMLInputElement;
    if (input.type === "range") void controller.setSacrificeBound(Number(input.value));
  });
  byId("front").addEventListener("click", (ev) => {
    const row = (ev.target as HTMLElement).closest<HTMLElement>("tr.front-row");
    if (row?.dataset.solution) controller.selectRow(Number(row.dataset.solution));
  });

  void controller.init(catalogCsv);
  return controller;
}
