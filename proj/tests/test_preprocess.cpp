#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "topkbench/corpus.hpp"
#include "topkbench/preprocess.hpp"

using namespace topkbench;

TEST_CASE("tag and link stripping") {
  SUBCASE("hashtags and mentions are collected, links dropped") {
    const TagStripResult r = strip_tags_links(
        "Gearing up for #fitness with @coach http://t.co/abc123 today");
    REQUIRE(r.tags.size() == 2);
    CHECK(r.tags[0] == "#fitness");
    CHECK(r.tags[1] == "@coach");
    CHECK(r.text == "Gearing up for  with   today");
  }
  SUBCASE("whitespace runs survive verbatim") {
    const TagStripResult r = strip_tags_links("a #b c");
    CHECK(r.text == "a  c");
    const TagStripResult tabs = strip_tags_links("a\t#b\tc");
    CHECK(tabs.text == "a\t\tc");
  }
  SUBCASE("https links and bare tags") {
    const TagStripResult r = strip_tags_links("#solo   HTTPS://x.y/z end");
    REQUIRE(r.tags.size() == 1);
    CHECK(r.tags[0] == "#solo");
    CHECK(r.text == "    end");
  }
  SUBCASE("a lone # or @ is kept as text") {
    const TagStripResult r = strip_tags_links("# @ stay");
    CHECK(r.tags.empty());
    CHECK(r.text == "# @ stay");
  }
  SUBCASE("empty input") {
    const TagStripResult r = strip_tags_links("");
    CHECK(r.tags.empty());
    CHECK(r.text.empty());
  }
}

TEST_CASE("contraction expansion") {
  CHECK(expand_contractions("don't stop") == "do not stop");
  CHECK(expand_contractions("I'm here") == "I am here");
  CHECK(expand_contractions("it's fine") == "it is fine");
  CHECK(expand_contractions("can't wait") == "cannot wait");
  CHECK(expand_contractions("couldn't've asked") == "could not have asked");
  SUBCASE("capitalized table hit keeps capitalization") {
    CHECK(expand_contractions("Can't wait") == "Cannot wait");
    CHECK(expand_contractions("Don't go") == "Do not go");
  }
  SUBCASE("possessive falls back to the generic rule") {
    CHECK(expand_contractions("Amanda's car") == "Amanda is car");
  }
  SUBCASE("generic suffix rules") {
    CHECK(expand_contractions("they'd go") == "they would go");
    CHECK(expand_contractions("drivers're busy") == "drivers are busy");
  }
  SUBCASE("words without apostrophes pass through") {
    CHECK(expand_contractions("plain words here") == "plain words here");
  }
  SUBCASE("punctuation around the token is preserved") {
    CHECK(expand_contractions("(don't)") == "(do not)");
  }
}

TEST_CASE("sentence split and punctuation cleanup") {
  CHECK(sentences_and_clean("Hello, world!") == "Hello world");
  CHECK(sentences_and_clean("One. Two.  Three?") == "One Two Three");
  CHECK(sentences_and_clean("well-known fact") == "wellknown fact");
  CHECK(sentences_and_clean("  spaced   out  ") == "spaced out");
  CHECK(sentences_and_clean("") == "");
  CHECK(sentences_and_clean("...") == "");
}

TEST_CASE("rule lemmatization") {
  SUBCASE("plural nouns") {
    CHECK(rule_lemma("cars") == "car");
    CHECK(rule_lemma("boxes") == "box");
    CHECK(rule_lemma("studies") == "study");
    CHECK(rule_lemma("glasses") == "glass");
  }
  SUBCASE("irregulars") {
    CHECK(rule_lemma("went") == "go");
    CHECK(rule_lemma("feet") == "foot");
    CHECK(rule_lemma("children") == "child");
    CHECK(rule_lemma("people") == "person");
    CHECK(rule_lemma("thought") == "think");
  }
  SUBCASE("identity exceptions stay put") {
    CHECK(rule_lemma("news") == "news");
    CHECK(rule_lemma("morning") == "morning");
    CHECK(rule_lemma("evening") == "evening");
  }
  SUBCASE("ing forms") {
    CHECK(rule_lemma("running") == "run");
    CHECK(rule_lemma("walking") == "walk");
    CHECK(rule_lemma("coming") == "come");
    CHECK(rule_lemma("writing") == "write");
  }
  SUBCASE("ed forms") {
    CHECK(rule_lemma("walked") == "walk");
    CHECK(rule_lemma("hopped") == "hop");
    CHECK(rule_lemma("loved") == "love");
    CHECK(rule_lemma("certified") == "certify");
  }
  SUBCASE("short words are left alone") {
    CHECK(rule_lemma("is") == "is");
    CHECK(rule_lemma("bus") == "bus");
    CHECK(rule_lemma("gas") == "gas");
  }
  SUBCASE("idempotence on a generated vocabulary") {
    GeneratorOptions options;
    options.seed = 7;
    const std::vector<TweetRecord> corpus =
        generate_corpus(ScaleFactor{0.0002}, options);
    for (const TweetRecord& record : corpus) {
      for (const VocabularyEntry& entry : record.words) {
        CAPTURE(entry.word);
        CHECK(rule_lemma(entry.word) == entry.word);
      }
    }
  }
}

TEST_CASE("stopwords") {
  CHECK(is_stopword("the"));
  CHECK(is_stopword("is"));
  CHECK(is_stopword("too"));
  CHECK(is_stopword("much"));
  CHECK(is_stopword("for"));
  CHECK(is_stopword("my"));
  CHECK_FALSE(is_stopword("car"));
  CHECK_FALSE(is_stopword("headache"));
}

TEST_CASE("lemmatize filters stopwords and lowercases") {
  CHECK(lemmatize("Amanda is car is too much for my headache") ==
        "amanda car headache");
  CHECK(lemmatize("The the THE") == "");
  SUBCASE("custom lemmatizer is honored") {
    const std::string out = lemmatize(
        "alpha beta", [](std::string_view w) { return std::string(w) + "x"; });
    CHECK(out == "alphax betax");
  }
}

TEST_CASE("term statistics") {
  SUBCASE("counts and augmented tf") {
    const std::vector<VocabularyEntry> words = term_stats("b a b");
    REQUIRE(words.size() == 2);
    CHECK(words[0].word == "a");
    CHECK(words[0].count == 1);
    CHECK(words[0].tf == 0.75);
    CHECK(words[1].word == "b");
    CHECK(words[1].count == 2);
    CHECK(words[1].tf == 1.0);
  }
  SUBCASE("singleton document") {
    const std::vector<VocabularyEntry> words = term_stats("solo");
    REQUIRE(words.size() == 1);
    CHECK(words[0].tf == 1.0);
    CHECK(words[0].count == 1);
  }
  SUBCASE("custom smoothing constant") {
    const std::vector<VocabularyEntry> words = term_stats("x y y", 0.2);
    REQUIRE(words.size() == 2);
    CHECK(words[0].word == "x");
    CHECK(words[0].tf == doctest::Approx(0.2 + 0.8 * 0.5).epsilon(1e-15));
    CHECK(words[1].tf == 1.0);
  }
  SUBCASE("smoothing constant domain") {
    CHECK_THROWS_AS(term_stats("x", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(term_stats("x", -0.01), std::invalid_argument);
  }
  SUBCASE("empty text yields no entries") {
    CHECK(term_stats("").empty());
  }
}

TEST_CASE("full pipeline") {
  const PreprocessOutput out =
      preprocess("Amanda's car is too much for my headache");
  CHECK(out.clean_text == "Amanda is car is too much for my headache");
  CHECK(out.lemma_text == "amanda car headache");
  CHECK(out.lemma_text_length == 3);
  REQUIRE(out.words.size() == 3);
  for (const VocabularyEntry& entry : out.words) {
    CHECK(entry.count == 1);
    CHECK(entry.tf == 1.0);
  }
  CHECK(out.words[0].word == "amanda");
  CHECK(out.words[1].word == "car");
  CHECK(out.words[2].word == "headache");

  SUBCASE("pipeline invariants over generated tweets") {
    GeneratorOptions options;
    options.seed = 11;
    const std::vector<TweetRecord> corpus =
        generate_corpus(ScaleFactor{0.0003}, options);
    for (const TweetRecord& record : corpus) {
      const PreprocessOutput o = preprocess(record.raw_text);
      std::uint32_t total = 0;
      for (std::size_t w = 0; w < o.words.size(); ++w) {
        total += o.words[w].count;
        CHECK(o.words[w].tf > 0.5);
        CHECK(o.words[w].tf <= 1.0);
        if (w > 0) CHECK(o.words[w - 1].word < o.words[w].word);
      }
      CHECK(total == o.lemma_text_length);
    }
  }
}
