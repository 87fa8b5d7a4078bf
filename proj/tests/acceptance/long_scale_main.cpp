// Opt-in long-running suite: streams the full-size corpora (half a million
// to 2.5 million tweets) and verifies the generator contract at scale
// without materializing any corpus in memory.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "topkbench/corpus.hpp"

using namespace topkbench;

namespace {

bool check_scale(double sf) {
  const auto expected = static_cast<std::uint64_t>(std::llround(sf * 1e6));
  const auto start = std::chrono::steady_clock::now();

  CorpusGenerator generator(ScaleFactor{sf});
  if (generator.total() != expected) {
    std::cout << "[FAIL] SF " << sf << ": generator advertises "
              << generator.total() << " tweets, expected " << expected << '\n';
    return false;
  }

  std::uint64_t count = 0;
  std::int64_t male = 0;
  std::int64_t female = 0;
  std::uint64_t domain_violations = 0;
  std::uint64_t next_id = 1;
  bool ids_sequential = true;

  TweetRecord record;
  while (generator.next(record)) {
    ++count;
    (record.author.gender == Gender::male ? male : female) += 1;
    if (record.date < domain::date_min || record.date > domain::date_max ||
        record.geo.x < domain::x_min || record.geo.x > domain::x_max ||
        record.geo.y < domain::y_min || record.geo.y > domain::y_max ||
        record.author.age < domain::age_min ||
        record.author.age > domain::age_max ||
        record.lemma_text_length == 0) {
      ++domain_violations;
    }
    if (record.id != next_id) ids_sequential = false;
    ++next_id;
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  bool ok = true;
  if (count != expected) {
    std::cout << "[FAIL] SF " << sf << ": produced " << count
              << " tweets, expected " << expected << '\n';
    ok = false;
  }
  if (std::llabs(male - female) > 1) {
    std::cout << "[FAIL] SF " << sf << ": gender counts differ by "
              << (male - female) << '\n';
    ok = false;
  }
  if (domain_violations != 0) {
    std::cout << "[FAIL] SF " << sf << ": " << domain_violations
              << " records fell outside the attribute domains\n";
    ok = false;
  }
  if (!ids_sequential) {
    std::cout << "[FAIL] SF " << sf << ": ids are not sequential from one\n";
    ok = false;
  }
  if (ok) {
    std::cout << "[PASS] SF " << sf << ": " << count << " tweets in "
              << elapsed << " s\n";
  }
  return ok;
}

}  // namespace

int main() {
  int failed = 0;
  for (const double sf : kFullScaleFactors) {
    if (!check_scale(sf)) ++failed;
  }
  std::cout << (5 - failed) << "/5 scale factors passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
