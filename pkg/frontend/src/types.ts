// Payload shapes exactly as the server sends them.

export interface ClusterResult {
  label: string;
  query_ngd: number;
  size: number;
  doc_ids: number[];
  doc_titles: string[];
}

export interface SearchResult {
  query: string;
  query_stem: string;
  n_docs_matched: number;
  clusters: ClusterResult[];
}

export interface DocumentInfo {
  id: number;
  title: string;
  source: string;
  text: string;
  n_sentences: number;
}

export interface Summary {
  doc_id: number;
  sentence_indices: number[];
  sentences: string[];
  scores: number[];
}

export interface ApiErrorBody {
  error_code: string;
  message: string;
}
