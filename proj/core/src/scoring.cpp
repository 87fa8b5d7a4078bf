#include "topkbench/scoring.hpp"

#include <cmath>
#include <stdexcept>

#include "topkbench/corpus.hpp"
#include "topkbench/errors.hpp"

namespace topkbench {

std::string_view to_string(LogBase log_base) {
  return log_base == LogBase::natural ? "natural" : "base10";
}

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::tfidf ? "tfidf" : "okapi";
}

std::string_view to_string(StatsScope scope) {
  return scope == StatsScope::filtered ? "filtered" : "global";
}

CorpusStats build_stats(const std::vector<TweetRecord>& docs) {
  if (docs.empty()) {
    throw std::invalid_argument("statistics require at least one document");
  }
  CorpusStats stats;
  stats.n_docs = docs.size();
  std::uint64_t total_len = 0;
  for (const auto& doc : docs) {
    total_len += doc.lemma_text_length;
    for (const auto& entry : doc.words) {
      ++stats.doc_freq[entry.word];
    }
  }
  stats.avg_doc_len = static_cast<double>(total_len) / static_cast<double>(stats.n_docs);
  return stats;
}

double idf_value(std::uint64_t n_docs, std::uint64_t doc_freq, LogBase log_base) {
  if (doc_freq == 0 || doc_freq > n_docs) {
    throw std::invalid_argument("document frequency must lie in [1, n_docs]");
  }
  const double ratio = static_cast<double>(n_docs) / static_cast<double>(doc_freq);
  return 1.0 + (log_base == LogBase::natural ? std::log(ratio) : std::log10(ratio));
}

double idf(const CorpusStats& stats, std::string_view word, LogBase log_base) {
  const auto it = stats.doc_freq.find(word);
  if (it == stats.doc_freq.end()) {
    throw AbsentTermError("term '" + std::string(word) + "' absent from statistics");
  }
  return idf_value(stats.n_docs, it->second, log_base);
}

double tfidf(double tf, double idf_weight) { return tf * idf_weight; }

double okapi_value(double tf, double idf_weight, std::uint64_t doc_len,
                   double avg_doc_len, double k1, double b) {
  if (!(tf > 0.0)) throw std::invalid_argument("tf must be positive");
  if (doc_len == 0) throw std::invalid_argument("doc_len must be positive");
  if (!(avg_doc_len > 0.0)) throw std::invalid_argument("avg_doc_len must be positive");
  const double tfidf_weight = tf * idf_weight;
  const double norm = 1.0 - b + b * (static_cast<double>(doc_len) / avg_doc_len);
  return tfidf_weight * (k1 + 1.0) / (tf + k1 * norm);
}

double okapi(double tf, double idf_weight, std::uint64_t doc_len,
             const CorpusStats& stats, const SchemeParams& params) {
  return okapi_value(tf, idf_weight, doc_len, stats.avg_doc_len, params.k1, params.b);
}

double sum_weights(std::span<const double> weights) {
  double total = 0.0;
  for (const double w : weights) total += w;
  return total;
}

}  // namespace topkbench
