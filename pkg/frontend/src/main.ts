import { ApiClient } from "./api.js";
import { App } from "./app.js";
import {
  renderClusters,
  renderError,
  renderSummary,
  renderSummaryPlaceholder,
} from "./render.js";
import { UiState, paramsToState, stateToParams } from "./state.js";

const api = new ApiClient((url) => fetch(url));

const queryInput = document.getElementById("query") as HTMLInputElement;
const searchButton = document.getElementById("search") as HTMLButtonElement;
const lengthSelect = document.getElementById("summary-length") as HTMLSelectElement;
const bannerHost = document.getElementById("banner") as HTMLDivElement;
const resultsHost = document.getElementById("results") as HTMLDivElement;
const summaryHost = document.getElementById("summary") as HTMLDivElement;

function titleOf(state: UiState, docId: number): string {
  for (const cluster of state.result?.clusters ?? []) {
    const at = cluster.doc_ids.indexOf(docId);
    if (at >= 0) {
      return cluster.doc_titles[at] ?? `document ${docId}`;
    }
  }
  return `document ${docId}`;
}

function paint(state: UiState): void {
  bannerHost.innerHTML = state.error ? renderError(state.error) : "";
  resultsHost.innerHTML = state.result
    ? renderClusters(state.result, state.selectedDoc)
    : "";
  summaryHost.innerHTML =
    state.summary && state.selectedDoc !== null
      ? renderSummary(state.summary, titleOf(state, state.selectedDoc))
      : renderSummaryPlaceholder();
  lengthSelect.value = String(state.summaryLength);
  const params = stateToParams(state).toString();
  history.replaceState(null, "", params ? `?${params}` : location.pathname);
}

const app = new App(api, paint);

function syncButton(): void {
  searchButton.disabled = queryInput.value.trim() === "";
}

queryInput.addEventListener("input", syncButton);
queryInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter" && !searchButton.disabled) {
    void app.runSearch(queryInput.value);
  }
});
searchButton.addEventListener("click", () => {
  void app.runSearch(queryInput.value);
});

resultsHost.addEventListener("click", (event) => {
  const button = (event.target as HTMLElement).closest<HTMLButtonElement>("button.doc");
  if (button?.dataset.docId) {
    void app.selectDocument(Number.parseInt(button.dataset.docId, 10));
  }
});

lengthSelect.addEventListener("change", () => {
  void app.setSummaryLength(Number.parseInt(lengthSelect.value, 10));
});

const fromUrl = paramsToState(new URLSearchParams(location.search));
queryInput.value = fromUrl.query;
syncButton();
void app.restore(fromUrl.query, fromUrl.selectedDoc, fromUrl.summaryLength);
