import { describe, expect, it } from "vitest";

import { escapeHtml, formatNgd, renderClusters, renderSummary } from "../src/render.js";
import { doc13Summary, sportsResult } from "./helpers.js";

describe("renderClusters", () => {
  it("shows label, four-decimal ngd, and document count per cluster", () => {
    const html = renderClusters(sportsResult, null);
    expect(html).toContain("cricket");
    expect(html).toContain("ngd 0.6706");
    expect(html).toContain("5 docs");
  });

  it("keeps clusters and documents in server order", () => {
    const html = renderClusters(sportsResult, null);
    expect(html.indexOf("cricket")).toBeLessThan(html.indexOf("footbal"));
    const ids = [...html.matchAll(/data-doc-id="(\d+)"/g)].map((m) => Number(m[1]));
    expect(ids).toEqual([13, 14, 15, 16, 18, 19, 20, 21, 22, 24]);
  });

  it("marks the selected document", () => {
    const html = renderClusters(sportsResult, 14);
    expect(html).toContain('class="doc selected" data-doc-id="14"');
  });

  it("renders the empty notice without clusters", () => {
    const html = renderClusters(
      { query: "sports", query_stem: "sport", n_docs_matched: 0, clusters: [] },
      null,
    );
    expect(html).toContain("no matching categories");
  });
});

describe("renderSummary", () => {
  it("renders all sentences verbatim in payload order", () => {
    const html = renderSummary(doc13Summary, "Cricket board opens an academy");
    const texts = [...html.matchAll(/data-sentence-index="\d+">([^<]*)</g)].map((m) => m[1]);
    expect(texts).toEqual(doc13Summary.sentences);
    const indices = [...html.matchAll(/data-sentence-index="(\d+)"/g)].map((m) => Number(m[1]));
    expect(indices).toEqual(doc13Summary.sentence_indices);
  });

  it("escapes markup in sentences and titles", () => {
    const html = renderSummary(
      {
        doc_id: 0,
        sentence_indices: [0],
        sentences: ["a <b> & \"c\""],
        scores: [1.0],
      },
      "<script>x</script>",
    );
    expect(html).not.toContain("<script>");
    expect(html).toContain("a &lt;b&gt; &amp; &quot;c&quot;");
  });
});

describe("formatting helpers", () => {
  it("formats ngd to four decimals", () => {
    expect(formatNgd(0.6705581125946178)).toBe("0.6706");
    expect(formatNgd(0)).toBe("0.0000");
  });

  it("escapes the four html metacharacters", () => {
    expect(escapeHtml(`<a href="x">&`)).toBe("&lt;a href=&quot;x&quot;&gt;&amp;");
  });
});
