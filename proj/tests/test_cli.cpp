#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "testenv.hpp"
#include "topkbench/corpus.hpp"
#include "topkbench/engine.hpp"
#include "topkbench/qcompile.hpp"
#include "topkbench/report.hpp"

using namespace topkbench;
using topkbench::testing::TempDir;
using topkbench::testing::read_file;
using topkbench::testing::write_file;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const TempDir& dir, const std::string& args) {
  static int invocation = 0;
  const std::string tag = std::to_string(invocation++);
  const auto out_path = dir.file("stdout-" + tag);
  const auto err_path = dir.file("stderr-" + tag);
  const std::string command = std::string("\"") + TOPKBENCH_CLI_PATH + "\" " +
                              args + " >\"" + out_path.string() + "\" 2>\"" +
                              err_path.string() + "\"";
  const int status = std::system(command.c_str());
  CliResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

const std::string kRawOnlyCorpus =
    R"({"_id":7,"rawText":"Amanda's car is too much for my headache",)"
    R"("author":99,"geoLocation":[20.0,10.0],"gender":"female","age":30,)"
    R"("date":"2015-09-18T00:00:00Z"})"
    "\n"
    R"({"_id":8,"rawText":"Gearing up for the night #tweets",)"
    R"("author":100,"geoLocation":[30.0,-20.0],"gender":"male","age":41,)"
    R"("date":"2015-09-18T06:30:00Z"})"
    "\n";

}  // namespace

TEST_CASE("generate writes a deterministic corpus") {
  TempDir dir("cli-generate");
  const auto first = dir.file("a.jsonl");
  const auto second = dir.file("b.jsonl");

  const CliResult a = run_cli(
      dir, "generate --sf 0.001 --seed 42 --out \"" + first.string() + "\"");
  CHECK(a.exit_code == 0);
  REQUIRE(std::filesystem::exists(first));
  CHECK(count_lines(read_file(first)) == 1000);

  const CliResult b = run_cli(
      dir, "generate --sf 0.001 --seed 42 --out \"" + second.string() + "\"");
  CHECK(b.exit_code == 0);
  CHECK(read_file(first) == read_file(second));

  const std::vector<TweetRecord> loaded = load_corpus(first);
  CHECK(loaded.size() == 1000);
}

TEST_CASE("cli argument errors exit with status 1") {
  TempDir dir("cli-errors");
  CHECK(run_cli(dir, "").exit_code == 1);
  CHECK(run_cli(dir, "frobnicate").exit_code == 1);

  const CliResult missing = run_cli(dir, "generate");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("Usage:") != std::string::npos);

  const CliResult unknown = run_cli(
      dir, "generate --bogus 1 --out \"" + dir.file("x.jsonl").string() + "\"");
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.err.find("Usage:") != std::string::npos);
}

TEST_CASE("io failures exit with status 2") {
  TempDir dir("cli-io");
  const CliResult unwritable = run_cli(
      dir, "generate --sf 0.0001 --out /nonexistent-dir-zzz/x.jsonl");
  CHECK(unwritable.exit_code == 2);

  const CliResult absent = run_cli(
      dir, "preprocess --in \"" + dir.file("absent.jsonl").string() +
               "\" --out \"" + dir.file("y.jsonl").string() + "\"");
  CHECK(absent.exit_code == 2);
}

TEST_CASE("preprocess derives the text fields") {
  TempDir dir("cli-preprocess");
  const auto in_path = dir.file("raw.jsonl");
  const auto out_path = dir.file("derived.jsonl");
  write_file(in_path, kRawOnlyCorpus);

  const CliResult result = run_cli(dir, "preprocess --in \"" + in_path.string() +
                                            "\" --out \"" + out_path.string() +
                                            "\"");
  CHECK(result.exit_code == 0);
  const std::vector<TweetRecord> records = load_corpus(out_path);
  REQUIRE(records.size() == 2);
  CHECK(records[0].id == 7);
  CHECK(records[0].clean_text == "Amanda is car is too much for my headache");
  CHECK(records[0].lemma_text == "amanda car headache");
  CHECK(records[0].lemma_text_length == 3);
  CHECK(records[0].words.size() == 3);
  CHECK(records[1].id == 8);
  CHECK(records[1].lemma_text_length > 0);

  SUBCASE("already-derived corpora pass through unchanged") {
    const auto generated = dir.file("g.jsonl");
    const auto repassed = dir.file("g2.jsonl");
    REQUIRE(run_cli(dir, "generate --sf 0.0002 --out \"" + generated.string() +
                             "\"")
                .exit_code == 0);
    REQUIRE(run_cli(dir, "preprocess --in \"" + generated.string() +
                             "\" --out \"" + repassed.string() + "\"")
                .exit_code == 0);
    CHECK(read_file(generated) == read_file(repassed));
  }
}

TEST_CASE("compile emits deterministic artifacts") {
  TempDir dir("cli-compile");

  SUBCASE("sql dialect matches the library output") {
    const CliResult run =
        run_cli(dir, "compile --query Q2 --scheme tfidf --dialect sql");
    CHECK(run.exit_code == 0);
    QuerySpec spec;
    spec.query_id = QueryId::q2;
    spec.date_range = DateRange{domain::date_min, domain::date_max};
    CHECK(run.out == to_sql(spec).text);
    CHECK(run.out.find("SELECT") != std::string::npos);
    CHECK(run.out.find(":pStartDate") != std::string::npos);

    const CliResult again =
        run_cli(dir, "compile --query Q2 --scheme tfidf --dialect sql");
    CHECK(again.out == run.out);
  }

  SUBCASE("mr dialect emits the json plan") {
    const CliResult run =
        run_cli(dir, "compile --query Q2 --scheme okapi --dialect mr");
    CHECK(run.exit_code == 0);
    const nlohmann::json plan = nlohmann::json::parse(run.out);
    CHECK(plan.at("query") == "Q2");
    CHECK(plan.at("scheme") == "okapi");
  }

  SUBCASE("--out writes the same bytes") {
    const auto artifact = dir.file("q1.sql");
    const CliResult to_file =
        run_cli(dir, "compile --query Q1 --out \"" + artifact.string() + "\"");
    CHECK(to_file.exit_code == 0);
    const CliResult to_stdout = run_cli(dir, "compile --query Q1");
    CHECK(read_file(artifact) == to_stdout.out);
  }

  SUBCASE("--schema prints the ddl") {
    const CliResult run = run_cli(dir, "compile --schema");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("CREATE TABLE") != std::string::npos);
  }

  SUBCASE("bad enumerations are validation errors") {
    CHECK(run_cli(dir, "compile --dialect cobol").exit_code == 1);
    CHECK(run_cli(dir, "compile --scheme bm42").exit_code == 1);
    CHECK(run_cli(dir, "compile --query Q9").exit_code == 1);
  }
}

TEST_CASE("bench and report round trip") {
  TempDir dir("cli-bench");
  const auto corpus = dir.file("c.jsonl");
  REQUIRE(run_cli(dir, "generate --sf 0.0005 --out \"" + corpus.string() + "\"")
              .exit_code == 0);

  const auto report_dir = dir.file("rep");
  const std::string bench_args =
      "bench --sf 0.0005 --corpus \"" + corpus.string() +
      "\" --queries Q1 --schemes tfidf --layouts relational --runs 2 "
      "--format both --out-dir \"" +
      report_dir.string() + "\"";
  REQUIRE(run_cli(dir, bench_args).exit_code == 0);

  const auto raw_path = report_dir / "bench_raw.csv";
  const auto agg_path = report_dir / "bench_aggregates.csv";
  const auto json_path = report_dir / "bench_report.json";
  REQUIRE(std::filesystem::exists(raw_path));
  REQUIRE(std::filesystem::exists(agg_path));
  REQUIRE(std::filesystem::exists(json_path));

  const std::string raw = read_file(raw_path);
  CHECK(count_lines(raw) == 3);  // header + two measured runs
  CHECK(raw.rfind("sf,query,scheme,layout,strategy,run_index,elapsed_ms,"
                  "matched_docs\n",
                  0) == 0);
  CHECK(count_lines(read_file(agg_path)) == 2);

  const BenchReport report = read_report_json_file(json_path);
  CHECK(report.rows.size() == 2);
  CHECK(report.aggregates.size() == 1);
  CHECK_FALSE(report.fixed_binding);

  SUBCASE("report converts json back to the same csv") {
    const auto conv = dir.file("conv");
    REQUIRE(run_cli(dir, "report --in \"" + json_path.string() +
                             "\" --format csv --out-dir \"" + conv.string() +
                             "\"")
                .exit_code == 0);
    CHECK(read_file(conv / "report_raw.csv") == raw);
    CHECK(read_file(conv / "report_aggregates.csv") == read_file(agg_path));

    const CliResult to_stdout =
        run_cli(dir, "report --in \"" + json_path.string() + "\" --format csv");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out == raw);
  }

  SUBCASE("report renormalizes json byte-stably") {
    const auto conv = dir.file("conv-json");
    REQUIRE(run_cli(dir, "report --in \"" + json_path.string() +
                             "\" --format json --out-dir \"" + conv.string() +
                             "\"")
                .exit_code == 0);
    CHECK(read_file(conv / "report.json") == read_file(json_path));
  }

  SUBCASE("report input errors") {
    CHECK(run_cli(dir, "report --in \"" + dir.file("absent.json").string() +
                           "\"")
              .exit_code == 2);
    CHECK(run_cli(dir, "report --in \"" + json_path.string() +
                           "\" --format yaml")
              .exit_code == 1);
  }

  SUBCASE("mismatched corpus pairing is rejected") {
    CHECK(run_cli(dir, "bench --sf 0.0005,0.001 --corpus \"" +
                           corpus.string() + "\" --queries Q1 --runs 1")
              .exit_code == 1);
  }
}

TEST_CASE("config file supplies defaults and flags override") {
  TempDir dir("cli-config");
  const auto corpus = dir.file("c.jsonl");
  REQUIRE(run_cli(dir, "generate --sf 0.0005 --out \"" + corpus.string() + "\"")
              .exit_code == 0);

  const auto config = dir.file("bench.ini");
  write_file(config,
             "sf=0.0005\n"
             "queries=Q1\n"
             "schemes=tfidf\n"
             "layouts=relational\n"
             "runs=2\n");

  const auto dir_defaults = dir.file("d1");
  REQUIRE(run_cli(dir, "bench --config \"" + config.string() + "\" --corpus \"" +
                           corpus.string() + "\" --out-dir \"" +
                           dir_defaults.string() + "\"")
              .exit_code == 0);
  CHECK(count_lines(read_file(dir_defaults / "bench_raw.csv")) == 3);

  const auto dir_override = dir.file("d2");
  REQUIRE(run_cli(dir, "bench --config \"" + config.string() + "\" --corpus \"" +
                           corpus.string() + "\" --runs 3 --out-dir \"" +
                           dir_override.string() + "\"")
              .exit_code == 0);
  CHECK(count_lines(read_file(dir_override / "bench_raw.csv")) == 4);

  CHECK(run_cli(dir, "bench --config \"" + dir.file("absent.ini").string() +
                         "\" --corpus \"" + corpus.string() + "\"")
            .exit_code == 1);
}
