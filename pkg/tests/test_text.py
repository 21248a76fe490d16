import string

from hypothesis import given, settings
from hypothesis import strategies as st

from querysum.text import (
    ABBREVIATIONS,
    STOPWORDS,
    collapse_whitespace,
    normalize_tokens,
    split_sentences,
    strip_html,
    word_tokens,
)


class TestStripHtml:
    def test_tag_removal(self):
        assert strip_html("<p>Hello <b>world</b></p>") == "Hello world"

    def test_plain_text_unchanged(self):
        assert strip_html("plain text, no tags") == "plain text, no tags"

    def test_script_body_and_entities(self):
        # matches reference HTML-to-text converters on this snippet
        raw = "<html><script>x=1;</script><body>A&amp;B</body></html>"
        assert strip_html(raw) == "A&B"

    def test_style_and_comments_dropped(self):
        raw = "<style>p{color:red}</style><!-- note -->text"
        assert strip_html(raw) == "text"

    def test_whitespace_collapsed(self):
        assert strip_html("a\n\n  b\t c") == "a b c"

    def test_bytes_accepted(self):
        assert strip_html(b"<i>ok</i>") == "ok"

    def test_invalid_utf8_replaced(self):
        assert "ok" in strip_html(b"ok \xff\xfe")

    @given(st.text(max_size=300))
    @settings(max_examples=200)
    def test_never_raises(self, raw):
        result = strip_html(raw)
        assert isinstance(result, str)


class TestNormalizeTokens:
    def test_stopword_removal_and_stemming(self):
        assert normalize_tokens("The running ponies") == ["run", "poni"]

    def test_all_stopwords(self):
        assert normalize_tokens("the is at of") == []

    def test_empty(self):
        assert normalize_tokens("") == []

    def test_digits_and_punctuation_are_separators(self):
        assert normalize_tokens("tennis2024, cricket!") == ["tenni", "cricket"]

    def test_stem_landing_on_stopword_is_dropped(self):
        # "canned" stems to "can", which the bundled list contains
        assert normalize_tokens("canned food") == ["food"]

    @given(st.text(alphabet=string.ascii_letters + string.digits + " .,'-!?", max_size=200))
    @settings(max_examples=300)
    def test_output_alphabet_and_no_stopwords(self, text):
        for token in normalize_tokens(text):
            assert token.isalpha()
            assert token == token.lower()
            assert token not in STOPWORDS


class TestSplitSentences:
    def test_two_sentences(self):
        assert split_sentences("A b. C d.") == ["A b.", "C d."]

    def test_no_terminator(self):
        assert split_sentences("no terminator here") == ["no terminator here"]

    def test_abbreviation_suppresses_split(self):
        assert split_sentences("See Fig. 2. It works.") == ["See Fig. 2.", "It works."]

    def test_lowercase_continuation_not_split(self):
        assert split_sentences("It was 5. p.m. then") == ["It was 5. p.m. then"]

    def test_exclamation_and_question(self):
        assert split_sentences("Really? Yes! Fine.") == ["Really?", "Yes!", "Fine."]

    def test_empty_text(self):
        assert split_sentences("") == []

    def test_abbreviation_list_is_lowercase_with_period(self):
        assert all(a == a.lower() and a.endswith(".") for a in ABBREVIATIONS)

    @given(
        st.lists(
            st.text(alphabet=string.ascii_letters + " ,;'", min_size=1, max_size=40),
            min_size=1,
            max_size=8,
        ),
        st.sampled_from([". ", "! ", "? "]),
    )
    @settings(max_examples=200)
    def test_partition_property(self, pieces, sep):
        text = sep.join(p.strip() for p in pieces if p.strip())
        joined = collapse_whitespace(" ".join(split_sentences(text)))
        assert joined == collapse_whitespace(text)

    def test_partition_on_corpus_documents(self, mini_index):
        for doc in mini_index.documents:
            joined = collapse_whitespace(" ".join(doc.sentences))
            assert joined == collapse_whitespace(doc.text)


class TestWordTokens:
    def test_lowercase_alpha_runs(self):
        assert word_tokens("It's A1 test-case") == ["it", "s", "a", "test", "case"]
