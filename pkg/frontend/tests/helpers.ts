import type { FetchResponse } from "../src/api.js";
import type { SearchResult, Summary } from "../src/types.js";

export function jsonResponse(body: unknown, status = 200): FetchResponse {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: () => Promise.resolve(body),
  };
}

// Fixtures shaped exactly like the documented API payloads.
export const sportsResult: SearchResult = {
  query: "sports",
  query_stem: "sport",
  n_docs_matched: 15,
  clusters: [
    {
      label: "cricket",
      query_ngd: 0.6705581125946178,
      size: 5,
      doc_ids: [13, 14, 15, 16, 18],
      doc_titles: [
        "Cricket board opens an academy",
        "County season opens with a young quick's five",
        "Spin still decides cricket on dry surfaces",
        "Five day test ends in a sporting collapse",
        "World showpiece decided off the last ball",
      ],
    },
    {
      label: "footbal",
      query_ngd: 0.6705581125946178,
      size: 5,
      doc_ids: [19, 20, 21, 22, 24],
      doc_titles: [
        "Cup climax: underdogs lift the trophy",
        "Derby of the decade settled in stoppage time",
        "Great escape keeps the club up",
        "Back three tactics explained",
        "Five teenagers promoted to the first squad",
      ],
    },
  ],
};

export const doc13Summary: Summary = {
  doc_id: 13,
  sentence_indices: [0, 1, 4],
  sentences: [
    "The cricket board launched a new academy on the edge of the city.",
    "Every young batsman there rehearses century building against tired bowlers in the nets.",
    "The first graduates already appear in first class cricket.",
  ],
  scores: [1.21, 1.05, 0.98],
};

/** Routes requests by URL; unrouted paths reject, like a dead server. */
export function stubFetch(routes: Record<string, FetchResponse | (() => Promise<FetchResponse>)>) {
  const calls: string[] = [];
  const impl = (url: string): Promise<FetchResponse> => {
    calls.push(url);
    const route = routes[url];
    if (route === undefined) {
      return Promise.reject(new Error(`unrouted request: ${url}`));
    }
    return typeof route === "function" ? route() : Promise.resolve(route);
  };
  return { impl, calls };
}
