#include "topkbench/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "preprocess_tables.hpp"

namespace topkbench {

namespace {

bool is_ascii_space(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return uc < 128 && std::isspace(uc) != 0;
}

bool is_ascii_punct(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return uc < 128 && std::ispunct(uc) != 0;
}

bool is_ascii_alnum(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return uc < 128 && std::isalnum(uc) != 0;
}

bool is_ascii_upper(char c) {
  const auto uc = static_cast<unsigned char>(c);
  return uc < 128 && std::isupper(uc) != 0;
}

char to_lower_ascii(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

char to_upper_ascii(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

bool starts_with_link_scheme(std::string_view token) {
  constexpr std::string_view schemes[] = {"http://", "https://"};
  for (auto scheme : schemes) {
    if (token.size() < scheme.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < scheme.size(); ++i) {
      if (to_lower_ascii(token[i]) != scheme[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

/// Calls fn(piece, is_token) for each maximal whitespace / non-whitespace run.
template <typename Fn>
void for_each_run(std::string_view text, Fn&& fn) {
  std::size_t i = 0;
  while (i < text.size()) {
    const bool ws = is_ascii_space(text[i]);
    std::size_t j = i + 1;
    while (j < text.size() && is_ascii_space(text[j]) == ws) ++j;
    fn(text.substr(i, j - i), !ws);
    i = j;
  }
}

std::string expand_token(std::string_view token) {
  // Split the token into punctuation prefix, core, punctuation suffix. The
  // core keeps apostrophes so contractions survive surrounding quotes and
  // brackets.
  auto is_core_char = [](char c) { return is_ascii_alnum(c) || c == '\''; };
  std::size_t first = 0;
  while (first < token.size() && !is_core_char(token[first])) ++first;
  if (first == token.size()) return std::string(token);
  std::size_t last = token.size() - 1;
  while (last > first && !is_core_char(token[last])) --last;

  const std::string_view prefix = token.substr(0, first);
  const std::string_view core = token.substr(first, last - first + 1);
  const std::string_view suffix = token.substr(last + 1);

  std::string lower;
  lower.reserve(core.size());
  for (char c : core) lower.push_back(to_lower_ascii(c));

  std::string expansion;
  const auto& table = detail::contraction_table();
  if (auto it = table.find(std::string_view(lower)); it != table.end()) {
    expansion = std::string(it->second);
  } else {
    // Generic apostrophe suffixes; anything else stays as written
    // (possessive plurals like "dogs'" fall through here).
    struct Rule {
      std::string_view suffix;
      std::string_view replacement;
    };
    static constexpr Rule rules[] = {
        {"n't", " not"}, {"'re", " are"},   {"'ll", " will"}, {"'ve", " have"},
        {"'s", " is"},   {"'m", " am"},     {"'d", " would"},
    };
    for (const auto& rule : rules) {
      if (lower.size() > rule.suffix.size() && lower.ends_with(rule.suffix)) {
        const auto stem = core.substr(0, core.size() - rule.suffix.size());
        if (!stem.empty() && is_ascii_alnum(stem.back())) {
          expansion = std::string(stem) + std::string(rule.replacement);
        }
        break;
      }
    }
    if (expansion.empty()) return std::string(token);
    return std::string(prefix) + expansion + std::string(suffix);
  }

  // Table hits are stored lowercase; carry over a leading capital.
  if (is_ascii_upper(core.front()) && !expansion.empty()) {
    expansion[0] = to_upper_ascii(expansion[0]);
  }
  return std::string(prefix) + expansion + std::string(suffix);
}

}  // namespace

std::string lowercase_ascii(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) out.push_back(to_lower_ascii(c));
  return out;
}

bool is_stopword(std::string_view lowercase_token) {
  return detail::stopword_set().contains(lowercase_token);
}

TagStripResult strip_tags_links(std::string_view raw_text) {
  TagStripResult result;
  result.text.reserve(raw_text.size());
  for_each_run(raw_text, [&](std::string_view run, bool is_token) {
    if (!is_token) {
      result.text.append(run);
      return;
    }
    if (run.size() >= 2 && (run.front() == '#' || run.front() == '@')) {
      result.tags.emplace_back(run);
      return;
    }
    if (starts_with_link_scheme(run)) return;
    result.text.append(run);
  });
  return result;
}

std::string expand_contractions(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for_each_run(text, [&](std::string_view run, bool is_token) {
    if (is_token) {
      out += expand_token(run);
    } else {
      out.append(run);
    }
  });
  return out;
}

std::string sentences_and_clean(std::string_view text) {
  std::string out;
  std::string sentence;
  auto flush = [&] {
    if (sentence.empty()) return;
    if (!out.empty()) out += ' ';
    out += sentence;
    sentence.clear();
  };

  bool pending_space = false;
  for (char c : text) {
    if (c == '.' || c == '!' || c == '?') {
      flush();
      pending_space = false;
      continue;
    }
    if (is_ascii_punct(c)) continue;  // deleted without inserting a space
    if (is_ascii_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !sentence.empty()) sentence += ' ';
    pending_space = false;
    sentence += c;
  }
  flush();
  return out;
}

std::string rule_lemma(std::string_view token) {
  // Applied to a fixpoint: a stripped form is fed back through the rules
  // ("feelings" -> "feeling" -> "feel"), which keeps lemma output stable
  // under re-lemmatization.
  const auto& exceptions = detail::lemma_exceptions();
  if (auto it = exceptions.find(token); it != exceptions.end()) {
    if (it->second == token) return std::string(token);
    return rule_lemma(it->second);
  }

  const std::size_t n = token.size();
  auto ends = [&](std::string_view suffix) { return token.ends_with(suffix); };

  auto undouble = [](std::string& stem) {
    if (stem.size() < 3) return;
    const char a = stem[stem.size() - 2], b = stem.back();
    if (a != b) return;
    // ll and ss stay doubled (telling, missing); the rest drop one letter.
    static constexpr std::string_view doubled = "bdgmnprt";
    if (doubled.find(b) != std::string_view::npos) stem.pop_back();
  };
  auto restore_e = [](std::string& stem) {
    if (stem.empty()) return;
    const char c = stem.back();
    if (c == 'v' || c == 'c' || c == 'z') stem += 'e';
  };

  if (n >= 5 && (ends("ies") || ends("ied"))) {
    return rule_lemma(std::string(token.substr(0, n - 3)) + "y");
  }
  if (n >= 5 && ends("es")) {
    const std::string_view rest = token.substr(0, n - 2);
    const char before = rest.back();
    const bool sibilant = before == 's' || before == 'x' || before == 'z' ||
                          rest.ends_with("ch") || rest.ends_with("sh");
    if (sibilant) return rule_lemma(rest);
  }
  if (n >= 4 && ends("s") && !ends("ss") && !ends("us") && !ends("is")) {
    return rule_lemma(token.substr(0, n - 1));
  }
  if (n >= 6 && ends("ing")) {
    std::string stem(token.substr(0, n - 3));
    undouble(stem);
    restore_e(stem);
    return rule_lemma(stem);
  }
  if (n >= 5 && ends("ed")) {
    std::string stem(token.substr(0, n - 2));
    undouble(stem);
    restore_e(stem);
    return rule_lemma(stem);
  }
  return std::string(token);
}

std::string lemmatize(std::string_view clean_text, const Lemmatizer& lemmatizer) {
  std::string out;
  for_each_run(clean_text, [&](std::string_view run, bool is_token) {
    if (!is_token) return;
    const std::string lower = lowercase_ascii(run);
    if (is_stopword(lower)) return;
    std::string lemma = lemmatizer ? lemmatizer(lower) : rule_lemma(lower);
    if (lemma.empty() || is_stopword(lemma)) return;
    if (!out.empty()) out += ' ';
    out += lemma;
  });
  return out;
}

std::vector<VocabularyEntry> term_stats(std::string_view lemma_text, double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw std::invalid_argument("term_stats: k must lie in [0, 1)");
  }
  std::map<std::string, std::uint32_t, std::less<>> counts;
  for_each_run(lemma_text, [&](std::string_view run, bool is_token) {
    if (!is_token) return;
    auto it = counts.find(run);
    if (it == counts.end()) {
      counts.emplace(std::string(run), 1u);
    } else {
      ++it->second;
    }
  });
  if (counts.empty()) return {};

  std::uint32_t max_count = 0;
  for (const auto& [word, count] : counts) max_count = std::max(max_count, count);

  std::vector<VocabularyEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [word, count] : counts) {
    VocabularyEntry e;
    e.word = word;
    e.count = count;
    e.tf = k + (1.0 - k) * static_cast<double>(count) / static_cast<double>(max_count);
    entries.push_back(std::move(e));
  }
  return entries;  // std::map iteration already yields ascending words
}

PreprocessOutput preprocess(std::string_view raw_text, const PreprocessOptions& options) {
  PreprocessOutput out;
  const auto stripped = strip_tags_links(raw_text);
  const auto expanded = expand_contractions(stripped.text);
  out.clean_text = sentences_and_clean(expanded);
  out.lemma_text = lemmatize(out.clean_text, options.lemmatizer);
  out.words = term_stats(out.lemma_text, options.k);
  std::uint64_t total = 0;
  for (const auto& entry : out.words) total += entry.count;
  out.lemma_text_length = static_cast<std::uint32_t>(total);
  return out;
}

}  // namespace topkbench
