#include "topkbench/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "templates.hpp"
#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

// Golden-ratio step for the date sequence. A low-discrepancy walk keeps
// per-day-tenth bin occupancy near-uniform at every corpus size, which an
// independent uniform draw does not guarantee tightly enough.
constexpr double kGoldenStep = 0.6180339887498949;

constexpr std::uint64_t kMinAuthors = 2;
constexpr std::uint64_t kMaxAuthors = 50000;

}  // namespace

std::string_view to_string(Gender gender) {
  return gender == Gender::male ? "male" : "female";
}

Gender gender_from_string(std::string_view text) {
  if (text == "male") return Gender::male;
  if (text == "female") return Gender::female;
  throw ValidationError("unknown gender: '" + std::string(text) + "'");
}

std::uint64_t ScaleFactor::tweet_count() const {
  if (!(value > 0.0)) return 0;
  return static_cast<std::uint64_t>(std::llround(value * 1e6));
}

CorpusGenerator::CorpusGenerator(ScaleFactor sf, GeneratorOptions options)
    : options_(std::move(options)), total_(sf.tweet_count()), tweet_rng_(0) {
  if (total_ == 0) {
    throw std::invalid_argument("scale factor must yield at least one tweet");
  }
  SplitMix64 master(options_.seed);
  SplitMix64 pool_rng = master.split(1);
  tweet_rng_ = master.split(2);
  date_phase_ = master.next_double();

  const std::uint64_t pool_size =
      std::clamp<std::uint64_t>(total_ / 10, kMinAuthors, kMaxAuthors);
  male_authors_.reserve((pool_size + 1) / 2);
  female_authors_.reserve(pool_size / 2);
  for (std::uint64_t i = 0; i < pool_size; ++i) {
    Author author;
    author.id = i + 1;
    author.gender = (i % 2 == 0) ? Gender::male : Gender::female;
    const auto& firsts = (author.gender == Gender::male) ? detail::male_first_names()
                                                         : detail::female_first_names();
    author.first_name = firsts[pool_rng.next_below(firsts.size())];
    const auto& lasts = detail::last_names();
    author.last_name = lasts[pool_rng.next_below(lasts.size())];
    author.age = static_cast<std::uint32_t>(
        pool_rng.next_int(domain::age_min, domain::age_max));
    ((author.gender == Gender::male) ? male_authors_ : female_authors_).push_back(author);
  }
}

bool CorpusGenerator::next(TweetRecord& out) {
  if (index_ >= total_) return false;
  const std::uint64_t i = index_++;

  out = TweetRecord{};
  out.id = i + 1;
  const Gender gender = (i % 2 == 0) ? Gender::male : Gender::female;
  const auto& pool = (gender == Gender::male) ? male_authors_ : female_authors_;
  out.author = pool[tweet_rng_.next_below(pool.size())];
  out.author.gender = gender;

  date_phase_ += kGoldenStep;
  if (date_phase_ >= 1.0) date_phase_ -= 1.0;
  const auto span = static_cast<double>(domain::date_max - domain::date_min + 1);
  out.date = domain::date_min + static_cast<std::int64_t>(date_phase_ * span);

  out.geo.x = tweet_rng_.next_in(domain::x_min, domain::x_max);
  out.geo.y = tweet_rng_.next_in(domain::y_min, domain::y_max);

  out.raw_text = detail::render_tweet(tweet_rng_);
  auto processed = preprocess(out.raw_text, options_.preprocess);
  out.clean_text = std::move(processed.clean_text);
  out.lemma_text = std::move(processed.lemma_text);
  out.lemma_text_length = processed.lemma_text_length;
  out.words = std::move(processed.words);
  return true;
}

std::vector<TweetRecord> generate_corpus(ScaleFactor sf, GeneratorOptions options) {
  CorpusGenerator generator(sf, std::move(options));
  std::vector<TweetRecord> corpus;
  corpus.reserve(generator.total());
  TweetRecord record;
  while (generator.next(record)) corpus.push_back(std::move(record));
  return corpus;
}

void validate_record(const TweetRecord& record) {
  auto fail = [&](const std::string& what) {
    throw ValidationError("record " + std::to_string(record.id) + ": " + what);
  };
  if (record.id == 0) fail("id must be positive");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < record.words.size(); ++i) {
    const auto& entry = record.words[i];
    if (entry.word.empty()) fail("empty word");
    if (entry.count == 0) fail("word '" + entry.word + "' has zero count");
    if (!(entry.tf > 0.0 && entry.tf <= 1.0)) {
      fail("word '" + entry.word + "' has tf outside (0, 1]");
    }
    if (i > 0 && !(record.words[i - 1].word < entry.word)) {
      fail("words not sorted or duplicated at '" + entry.word + "'");
    }
    total += entry.count;
  }
  if (total != record.lemma_text_length) {
    fail("lemmaTextLength " + std::to_string(record.lemma_text_length) +
         " does not match word counts totaling " + std::to_string(total));
  }
}

}  // namespace topkbench
