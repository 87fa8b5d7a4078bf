#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace topkbench {

/// Per-document statistics for one distinct term.
struct VocabularyEntry {
  double tf = 0.0;
  std::uint32_t count = 0;
  std::string word;

  friend bool operator==(const VocabularyEntry&, const VocabularyEntry&) = default;
};

/// Maps one lowercase token to its lemma.
using Lemmatizer = std::function<std::string(std::string_view)>;

struct PreprocessOptions {
  /// Floor of the augmented term frequency, in [0, 1).
  double k = 0.5;
  /// Empty means the built-in rule lemmatizer.
  Lemmatizer lemmatizer;
};

struct PreprocessOutput {
  std::string clean_text;
  std::string lemma_text;
  std::uint32_t lemma_text_length = 0;
  std::vector<VocabularyEntry> words;  // sorted by word, ascending
};

struct TagStripResult {
  std::vector<std::string> tags;  // #tags and @mentions, in order of appearance
  std::string text;               // input with tags and links removed
};

/// Extracts #tags and @mentions and deletes http(s) links. Whitespace runs
/// between the remaining tokens are preserved verbatim.
TagStripResult strip_tags_links(std::string_view raw_text);

/// Expands English contractions ("it's" -> "it is") using a lookup table
/// plus generic apostrophe-suffix rules. Unknown forms are left intact.
std::string expand_contractions(std::string_view text);

/// Splits on sentence terminators (. ! ?), deletes ASCII punctuation,
/// collapses whitespace, and joins the sentences with single spaces.
std::string sentences_and_clean(std::string_view text);

/// Lowercases tokens, drops stopwords, maps the rest through the lemmatizer.
/// Tokens whose lemma is itself a stopword are dropped as well, which makes
/// the clean -> lemma stage idempotent.
std::string lemmatize(std::string_view clean_text, const Lemmatizer& lemmatizer = {});

/// Distinct terms of a lemma text with counts and augmented term frequency
///   tf = k + (1 - k) * count / max_count.
/// Throws std::invalid_argument unless 0 <= k < 1.
std::vector<VocabularyEntry> term_stats(std::string_view lemma_text, double k = 0.5);

/// Runs the full pipeline: strip, expand, clean, lemmatize, count.
PreprocessOutput preprocess(std::string_view raw_text, const PreprocessOptions& options = {});

/// True for tokens on the built-in English stopword list (expects lowercase).
bool is_stopword(std::string_view lowercase_token);

/// Built-in suffix-rule lemmatizer (plural and -ing/-ed stripping with an
/// exception table). Expects a lowercase token.
std::string rule_lemma(std::string_view lowercase_token);

/// ASCII lowercase copy; bytes outside A-Z pass through.
std::string lowercase_ascii(std::string_view token);

}  // namespace topkbench
