#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "topkbench/preprocess.hpp"
#include "topkbench/rng.hpp"

namespace topkbench {

enum class Gender { male, female };

std::string_view to_string(Gender gender);
Gender gender_from_string(std::string_view text);  // throws ValidationError

struct Author {
  std::uint64_t id = 0;
  std::string first_name;
  std::string last_name;
  Gender gender = Gender::male;
  std::uint32_t age = 0;

  friend bool operator==(const Author&, const Author&) = default;
};

struct GeoPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

struct TweetRecord {
  std::uint64_t id = 0;
  std::string raw_text;
  std::string clean_text;
  std::string lemma_text;
  Author author;
  GeoPoint geo;
  std::uint32_t lemma_text_length = 0;
  std::vector<VocabularyEntry> words;  // sorted by word, ascending
  std::int64_t date = 0;               // Unix seconds, UTC

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

// Value domains used by the generator and the query parameter sampler.
namespace domain {

namespace impl {
constexpr std::int64_t utc_seconds(int y, unsigned mo, unsigned d, int h, int mi, int s) {
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo},
                                        std::chrono::day{d}};
  const std::chrono::sys_days days{ymd};
  return std::chrono::duration_cast<std::chrono::seconds>(days.time_since_epoch()).count() +
         h * 3600ll + mi * 60ll + s;
}
}  // namespace impl

inline constexpr std::int64_t date_min = impl::utc_seconds(2015, 9, 17, 20, 41, 35);
inline constexpr std::int64_t date_max = impl::utc_seconds(2015, 9, 19, 4, 5, 45);
inline constexpr double x_min = 15.0;
inline constexpr double x_max = 50.0;
inline constexpr double y_min = -124.0;
inline constexpr double y_max = 120.0;
inline constexpr std::uint32_t age_min = 13;
inline constexpr std::uint32_t age_max = 90;

}  // namespace domain

/// Corpus size expressed as a fraction of one million tweets.
struct ScaleFactor {
  double value = 0.001;

  std::uint64_t tweet_count() const;
};

/// The full-size ladder used for end-to-end measurements.
inline constexpr double kFullScaleFactors[] = {0.5, 1.0, 1.5, 2.0, 2.5};
/// Small factors suitable for CI and local smoke runs.
inline constexpr double kSmokeScaleFactors[] = {0.001, 0.01, 0.1};

struct GeneratorOptions {
  std::uint64_t seed = kDefaultSeed;
  PreprocessOptions preprocess;
};

/// Streaming deterministic tweet generator: same scale factor and seed give
/// the same records on every platform.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(ScaleFactor sf, GeneratorOptions options = {});

  std::uint64_t total() const { return total_; }
  std::uint64_t produced() const { return index_; }

  /// Fills the next record; returns false when the corpus is exhausted.
  bool next(TweetRecord& out);

 private:
  GeneratorOptions options_;
  std::uint64_t total_ = 0;
  std::uint64_t index_ = 0;
  SplitMix64 tweet_rng_;
  double date_phase_ = 0.0;
  std::vector<Author> male_authors_;
  std::vector<Author> female_authors_;
};

/// Generates the whole corpus eagerly.
std::vector<TweetRecord> generate_corpus(ScaleFactor sf, GeneratorOptions options = {});

/// One record as a single-line JSON document.
std::string record_to_jsonl(const TweetRecord& record);

/// Parses one JSONL line. Records without a "words" field are run through
/// the preprocessing pipeline. Throws ParseError / ValidationError.
TweetRecord record_from_jsonl(std::string_view line, const PreprocessOptions& options = {});

/// Checks per-record invariants; throws ValidationError naming the record.
void validate_record(const TweetRecord& record);

void save_corpus(const std::vector<TweetRecord>& corpus, const std::filesystem::path& path);
void save_corpus(CorpusGenerator& generator, const std::filesystem::path& path);
std::vector<TweetRecord> load_corpus(const std::filesystem::path& path,
                                     const PreprocessOptions& options = {});

}  // namespace topkbench
