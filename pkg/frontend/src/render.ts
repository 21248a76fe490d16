import type { SearchResult, Summary } from "./types.js";

// Rendering is string-in, string-out so it can be tested without a DOM.
// The order of clusters, documents, and sentences is exactly the server's;
// the client never reorders or rewrites anything it received.

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatNgd(value: number): string {
  return value.toFixed(4);
}

export function renderError(message: string): string {
  return `<div class="banner error" role="alert">${escapeHtml(message)}</div>`;
}

export function renderClusters(result: SearchResult, selectedDoc: number | null): string {
  if (result.clusters.length === 0) {
    return `<p class="empty">no matching categories</p>`;
  }
  const header =
    `<p class="result-meta">${result.n_docs_matched} documents in ` +
    `${result.clusters.length} categories for ` +
    `<strong>${escapeHtml(result.query)}</strong></p>`;
  const sections = result.clusters.map((cluster) => {
    const rows = cluster.doc_ids
      .map((docId, i) => {
        const selected = docId === selectedDoc ? " selected" : "";
        const title = escapeHtml(cluster.doc_titles[i] ?? `document ${docId}`);
        return (
          `<li><button type="button" class="doc${selected}" data-doc-id="${docId}">` +
          `<span class="doc-id">${docId}</span> ${title}</button></li>`
        );
      })
      .join("");
    return (
      `<details class="cluster" open>` +
      `<summary><span class="label">${escapeHtml(cluster.label)}</span>` +
      `<span class="ngd">ngd ${formatNgd(cluster.query_ngd)}</span>` +
      `<span class="count">${cluster.size} docs</span></summary>` +
      `<ul class="docs">${rows}</ul></details>`
    );
  });
  return header + sections.join("");
}

export function renderSummary(summary: Summary, title: string): string {
  const items = summary.sentences
    .map((sentence, i) => {
      const index = summary.sentence_indices[i];
      const score = summary.scores[i];
      return (
        `<li><span class="score">${(score ?? 0).toFixed(4)}</span>` +
        `<span class="sentence" data-sentence-index="${index}">${escapeHtml(sentence)}</span></li>`
      );
    })
    .join("");
  return (
    `<h2>${escapeHtml(title)}</h2>` +
    `<ol class="summary-sentences">${items}</ol>`
  );
}

export function renderSummaryPlaceholder(): string {
  return `<p class="empty">select a document to see its summary</p>`;
}
