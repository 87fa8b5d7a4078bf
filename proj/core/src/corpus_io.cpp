#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "topkbench/corpus.hpp"
#include "topkbench/errors.hpp"
#include "topkbench/time_utils.hpp"

namespace topkbench {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_to_json(const TweetRecord& r) {
  ordered_json j;
  j["_id"] = r.id;
  j["rawText"] = r.raw_text;
  j["cleanText"] = r.clean_text;
  j["lemmaText"] = r.lemma_text;
  j["author"] = r.author.id;
  // Names are not part of the minimal document shape; they are kept only
  // when present so that minimal documents round-trip unchanged.
  if (!r.author.first_name.empty()) j["firstName"] = r.author.first_name;
  if (!r.author.last_name.empty()) j["lastName"] = r.author.last_name;
  j["geoLocation"] = ordered_json::array({r.geo.x, r.geo.y});
  j["gender"] = std::string(to_string(r.author.gender));
  j["age"] = r.author.age;
  j["lemmaTextLength"] = r.lemma_text_length;
  auto words = ordered_json::array();
  for (const auto& entry : r.words) {
    ordered_json w;
    w["tf"] = entry.tf;
    w["count"] = entry.count;
    w["word"] = entry.word;
    words.push_back(std::move(w));
  }
  j["words"] = std::move(words);
  j["date"] = format_iso8601_utc(r.date);
  return j;
}

TweetRecord record_from_json(const ordered_json& j, const PreprocessOptions& options) {
  TweetRecord r;
  r.id = j.at("_id").get<std::uint64_t>();
  r.raw_text = j.at("rawText").get<std::string>();
  r.author.id = j.at("author").get<std::uint64_t>();
  if (j.contains("firstName")) r.author.first_name = j.at("firstName").get<std::string>();
  if (j.contains("lastName")) r.author.last_name = j.at("lastName").get<std::string>();

  const auto& geo = j.at("geoLocation");
  if (!geo.is_array() || geo.size() != 2) {
    throw ValidationError("record " + std::to_string(r.id) +
                          ": geoLocation must be a two-element array");
  }
  r.geo.x = geo[0].get<double>();
  r.geo.y = geo[1].get<double>();

  r.author.gender = gender_from_string(j.at("gender").get<std::string>());
  r.author.age = j.at("age").get<std::uint32_t>();
  r.date = parse_iso8601_utc(j.at("date").get<std::string>());

  if (j.contains("words")) {
    r.clean_text = j.value("cleanText", std::string{});
    r.lemma_text = j.value("lemmaText", std::string{});
    if (!j.contains("lemmaTextLength")) {
      throw ValidationError("record " + std::to_string(r.id) +
                            ": words present but lemmaTextLength missing");
    }
    r.lemma_text_length = j.at("lemmaTextLength").get<std::uint32_t>();
    for (const auto& w : j.at("words")) {
      VocabularyEntry entry;
      entry.tf = w.at("tf").get<double>();
      entry.count = w.at("count").get<std::uint32_t>();
      entry.word = w.at("word").get<std::string>();
      r.words.push_back(std::move(entry));
    }
  } else {
    // Raw documents are admitted through the preprocessing pipeline.
    auto processed = preprocess(r.raw_text, options);
    r.clean_text = std::move(processed.clean_text);
    r.lemma_text = std::move(processed.lemma_text);
    r.lemma_text_length = processed.lemma_text_length;
    r.words = std::move(processed.words);
  }

  validate_record(r);
  return r;
}

}  // namespace

std::string record_to_jsonl(const TweetRecord& record) {
  return record_to_json(record).dump();
}

TweetRecord record_from_jsonl(std::string_view line, const PreprocessOptions& options) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return record_from_json(j, options);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid record: ") + e.what());
  }
}

void save_corpus(const std::vector<TweetRecord>& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  for (const auto& record : corpus) {
    out << record_to_jsonl(record) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void save_corpus(CorpusGenerator& generator, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  TweetRecord record;
  while (generator.next(record)) {
    out << record_to_jsonl(record) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<TweetRecord> load_corpus(const std::filesystem::path& path,
                                     const PreprocessOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");

  std::vector<TweetRecord> corpus;
  std::unordered_set<std::uint64_t> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto context = [&] { return path.string() + " line " + std::to_string(line_no) + ": "; };
    try {
      TweetRecord record = record_from_jsonl(line, options);
      if (!seen_ids.insert(record.id).second) {
        throw ValidationError("duplicate _id " + std::to_string(record.id));
      }
      corpus.push_back(std::move(record));
    } catch (const ParseError& e) {
      throw ParseError(context() + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(context() + e.what());
    }
  }
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return corpus;
}

}  // namespace topkbench
