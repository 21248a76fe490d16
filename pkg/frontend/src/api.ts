import type { DocumentInfo, SearchResult, Summary } from "./types.js";

// Minimal slice of the fetch response the client relies on, so tests can
// stub it with plain objects.
export interface FetchResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string) => Promise<FetchResponse>;

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorFrom(response: FetchResponse): Promise<ApiError> {
  try {
    const body = (await response.json()) as { error_code?: string; message?: string };
    return new ApiError(
      body.error_code ?? "unknown_error",
      body.message ?? `request failed with status ${response.status}`,
      response.status,
    );
  } catch {
    return new ApiError("unknown_error", `request failed with status ${response.status}`, response.status);
  }
}

export class ApiClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly baseUrl: string = "",
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`);
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return (await response.json()) as T;
  }

  search(query: string): Promise<SearchResult> {
    return this.get<SearchResult>(`/api/search?q=${encodeURIComponent(query)}`);
  }

  getDocument(docId: number): Promise<DocumentInfo> {
    return this.get<DocumentInfo>(`/api/docs/${docId}`);
  }

  getSummary(docId: number, sentences: number): Promise<Summary> {
    return this.get<Summary>(`/api/docs/${docId}/summary?sentences=${sentences}`);
  }
}
