"""Text preprocessing: HTML stripping, tokenization, stemming, sentence splitting.

All functions are pure and deterministic. The stopword list is a fixed,
versioned artifact bundled with the package (data/stopwords.txt); indexes
record which list version produced them.
"""

from __future__ import annotations

import re
from html.parser import HTMLParser
from importlib import resources

from . import porter

STOPWORD_LIST_VERSION = 1

_WORD_RE = re.compile(r"[a-z]+")
_WS_RE = re.compile(r"\s+")
_BOUNDARY_RE = re.compile(r"([.!?]+)(\s+)")

# Suppresses sentence breaks after common abbreviations ("See Fig. 2").
ABBREVIATIONS = frozenset({
    "dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "jr.", "sr.",
    "fig.", "figs.", "eq.", "sec.", "ch.", "no.", "vol.", "al.",
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "dept.", "univ.", "inc.",
    "ltd.", "co.",
})


def _load_stopwords() -> frozenset[str]:
    raw = resources.files("querysum").joinpath("data/stopwords.txt").read_text("utf-8")
    words = set()
    for line in raw.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


STOPWORDS = _load_stopwords()


class _HtmlTextExtractor(HTMLParser):
    """Collects visible text, skipping script/style bodies and comments."""

    _SKIP_TAGS = {"script", "style"}

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self._skip_depth = 0
        self._in_title = False
        self.parts: list[str] = []
        self.title_parts: list[str] = []

    def handle_starttag(self, tag, attrs):
        if tag in self._SKIP_TAGS:
            self._skip_depth += 1
        elif tag == "title":
            self._in_title = True
        self.parts.append(" ")

    def handle_endtag(self, tag):
        if tag in self._SKIP_TAGS and self._skip_depth > 0:
            self._skip_depth -= 1
        elif tag == "title":
            self._in_title = False
        self.parts.append(" ")

    def handle_data(self, data):
        if self._in_title:
            self.title_parts.append(data)
        elif self._skip_depth == 0:
            self.parts.append(data)


def collapse_whitespace(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def _decode(raw: bytes | str) -> str:
    if isinstance(raw, bytes):
        return raw.decode("utf-8", errors="replace")
    return raw


def extract_html(raw: bytes | str) -> tuple[str, str | None]:
    """Strip markup from HTML-ish input, returning (text, title or None).

    Malformed input is handled best-effort and never rejected; plain text
    comes back unchanged apart from whitespace normalization.
    """
    parser = _HtmlTextExtractor()
    parser.feed(_decode(raw))
    parser.close()
    text = collapse_whitespace("".join(parser.parts))
    title = collapse_whitespace("".join(parser.title_parts)) or None
    return text, title


def strip_html(raw: bytes | str) -> str:
    """Return the visible plain text of an HTML document."""
    return extract_html(raw)[0]


def looks_like_html(raw: bytes | str) -> bool:
    """Cheap sniff used at ingest time to decide whether to strip markup."""
    head = _decode(raw)[:4096].lower()
    return bool(re.search(
        r"<\s*(!doctype|html|head|body|title|script|style|meta|div|span|p|br|a\s|h[1-6])",
        head,
    ))


def word_tokens(text: str) -> list[str]:
    """Lowercase alphabetic tokens; digits and punctuation are separators."""
    return _WORD_RE.findall(text.lower())


def normalize_tokens(text: str) -> list[str]:
    """Tokenize, drop stopwords, and stem, preserving token order.

    Stopwords are filtered both before and after stemming so the output
    never contains a bundled stopword (some inflected forms stem onto one,
    e.g. "canned" -> "can").
    """
    stems = []
    for token in word_tokens(text):
        if token in STOPWORDS:
            continue
        stemmed = porter.stem(token)
        if stemmed and stemmed not in STOPWORDS:
            stems.append(stemmed)
    return stems


def _token_before(text: str, end: int) -> str:
    """The whitespace-delimited token ending at position end, lowercased."""
    match = re.search(r"(\S+)$", text[:end])
    return match.group(1).lower() if match else ""


def split_sentences(text: str) -> list[str]:
    """Split plain text into sentences.

    Breaks occur after runs of . ! ? followed by whitespace and an uppercase
    letter, or at end of text. Breaks after known abbreviations are
    suppressed. Concatenating the result with single spaces and collapsing
    whitespace reproduces the whitespace-collapsed input.
    """
    sentences = []
    start = 0
    for match in _BOUNDARY_RE.finditer(text):
        end = match.end(1)
        nxt = match.end()
        if nxt < len(text) and not text[nxt].isupper():
            continue
        if _token_before(text, end) in ABBREVIATIONS:
            continue
        piece = text[start:end].strip()
        if piece:
            sentences.append(piece)
        start = nxt
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
