import type { SearchResult, Summary } from "./types.js";

export const DEFAULT_SUMMARY_LENGTH = 5;

// Everything the view needs; summary is only ever set while a document in
// the current result is selected.
export interface UiState {
  query: string;
  result: SearchResult | null;
  selectedDoc: number | null;
  summary: Summary | null;
  summaryLength: number;
  error: string | null;
}

export function initialState(): UiState {
  return {
    query: "",
    result: null,
    selectedDoc: null,
    summary: null,
    summaryLength: DEFAULT_SUMMARY_LENGTH,
    error: null,
  };
}

// The URL is the durable form of the state: q (query), doc (selected
// document), n (summary length). Deep links re-render the same view.
export function stateToParams(state: UiState): URLSearchParams {
  const params = new URLSearchParams();
  if (state.query) {
    params.set("q", state.query);
  }
  if (state.selectedDoc !== null) {
    params.set("doc", String(state.selectedDoc));
  }
  if (state.summaryLength !== DEFAULT_SUMMARY_LENGTH) {
    params.set("n", String(state.summaryLength));
  }
  return params;
}

export interface UrlState {
  query: string;
  selectedDoc: number | null;
  summaryLength: number;
}

export function paramsToState(params: URLSearchParams): UrlState {
  const doc = params.get("doc");
  const parsedDoc = doc === null ? null : Number.parseInt(doc, 10);
  const n = Number.parseInt(params.get("n") ?? "", 10);
  return {
    query: params.get("q") ?? "",
    selectedDoc: parsedDoc !== null && Number.isFinite(parsedDoc) ? parsedDoc : null,
    summaryLength: Number.isFinite(n) && n >= 1 ? n : DEFAULT_SUMMARY_LENGTH,
  };
}
