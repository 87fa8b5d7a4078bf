#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace topkbench {

struct TweetRecord;

enum class LogBase { natural, base10 };
enum class Scheme { tfidf, okapi };
enum class StatsScope { filtered, global };

std::string_view to_string(LogBase log_base);
std::string_view to_string(Scheme scheme);
std::string_view to_string(StatsScope scope);

struct SchemeParams {
  double k = 0.5;    // augmented TF floor, fixed at preprocessing time
  double k1 = 1.2;   // saturation, valid range [1.2, 2.0]
  double b = 0.75;   // length normalization strength
  LogBase log_base = LogBase::natural;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Collection-level statistics the schemes consume. Scope (whole corpus vs
/// filtered subset) is decided by whoever builds them.
struct CorpusStats {
  std::uint64_t n_docs = 0;
  double avg_doc_len = 0.0;
  std::map<std::string, std::uint64_t, std::less<>> doc_freq;
};

/// Builds statistics over the given documents.
/// Throws std::invalid_argument when docs is empty.
CorpusStats build_stats(const std::vector<TweetRecord>& docs);

/// idf = 1 + log(N / n). Throws std::invalid_argument unless 1 <= n <= N.
double idf_value(std::uint64_t n_docs, std::uint64_t doc_freq,
                 LogBase log_base = LogBase::natural);

/// Stats-based lookup; throws AbsentTermError when word is not in doc_freq.
double idf(const CorpusStats& stats, std::string_view word,
           LogBase log_base = LogBase::natural);

double tfidf(double tf, double idf_weight);

/// Okapi BM25 weight of one term occurrence record.
/// Throws std::invalid_argument for nonpositive tf, doc_len or avg_doc_len.
double okapi_value(double tf, double idf_weight, std::uint64_t doc_len,
                   double avg_doc_len, double k1, double b);

double okapi(double tf, double idf_weight, std::uint64_t doc_len,
             const CorpusStats& stats, const SchemeParams& params);

/// Ordered sum of one term's per-document weights over a selected set.
double sum_weights(std::span<const double> weights);

}  // namespace topkbench
