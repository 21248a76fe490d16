import { ApiClient, ApiError } from "./api.js";
import { UiState, initialState } from "./state.js";

// Controller: owns the UiState, talks to the API, and invokes the render
// callback after every transition. Each action carries a sequence number;
// responses arriving after a newer request started are discarded, so a slow
// search can never overwrite a newer one.

export class App {
  state: UiState = initialState();
  private searchSeq = 0;
  private summarySeq = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (state: UiState) => void,
  ) {}

  private publish(): void {
    this.onChange(this.state);
  }

  async runSearch(query: string): Promise<void> {
    const trimmed = query.trim();
    if (!trimmed) {
      return; // the view keeps the button disabled; guard stays for deep links
    }
    const seq = ++this.searchSeq;
    this.state = { ...this.state, query: trimmed, error: null };
    this.publish();
    try {
      const result = await this.api.search(trimmed);
      if (seq !== this.searchSeq) {
        return; // superseded by a newer search
      }
      this.state = {
        ...this.state,
        result,
        selectedDoc: null,
        summary: null,
      };
    } catch (error) {
      if (seq !== this.searchSeq) {
        return;
      }
      // the previous result stays on screen under the banner
      this.state = { ...this.state, error: messageOf(error) };
    }
    this.publish();
  }

  async selectDocument(docId: number, sentences?: number): Promise<void> {
    if (!this.docInResult(docId)) {
      return; // selection must come from the current result list
    }
    const length = sentences ?? this.state.summaryLength;
    const seq = ++this.summarySeq;
    this.state = { ...this.state, selectedDoc: docId, summaryLength: length, error: null };
    this.publish();
    try {
      const summary = await this.api.getSummary(docId, length);
      if (seq !== this.summarySeq) {
        return;
      }
      this.state = { ...this.state, summary };
    } catch (error) {
      if (seq !== this.summarySeq) {
        return;
      }
      this.state = {
        ...this.state,
        summary: null,
        selectedDoc: null,
        error: messageOf(error),
      };
    }
    this.publish();
  }

  async setSummaryLength(sentences: number): Promise<void> {
    this.state = { ...this.state, summaryLength: sentences };
    if (this.state.selectedDoc !== null) {
      await this.selectDocument(this.state.selectedDoc, sentences);
    } else {
      this.publish();
    }
  }

  docInResult(docId: number): boolean {
    const result = this.state.result;
    if (!result) {
      return false;
    }
    return result.clusters.some((cluster) => cluster.doc_ids.includes(docId));
  }

  /** Rebuild the view from URL parameters (deep link or back/forward). */
  async restore(query: string, selectedDoc: number | null, summaryLength: number): Promise<void> {
    this.state = { ...this.state, summaryLength };
    if (!query) {
      this.publish();
      return;
    }
    await this.runSearch(query);
    if (selectedDoc !== null && this.docInResult(selectedDoc)) {
      await this.selectDocument(selectedDoc, summaryLength);
    }
  }
}

function messageOf(error: unknown): string {
  if (error instanceof ApiError) {
    return error.message;
  }
  if (error instanceof Error) {
    return error.message;
  }
  return String(error);
}
