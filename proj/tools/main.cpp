#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topkbench/bench.hpp"
#include "topkbench/corpus.hpp"
#include "topkbench/engine.hpp"
#include "topkbench/errors.hpp"
#include "topkbench/qcompile.hpp"
#include "topkbench/report.hpp"

namespace {

using namespace topkbench;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

struct GenerateArgs {
  double sf = 0.001;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  double smoothing_k = 0.5;
};

int run_generate(const GenerateArgs& args) {
  GeneratorOptions options;
  options.seed = args.seed;
  options.preprocess.k = args.smoothing_k;
  CorpusGenerator generator(ScaleFactor{args.sf}, options);
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + args.out);
  TweetRecord record;
  std::uint64_t written = 0;
  while (generator.next(record)) {
    out << record_to_jsonl(record) << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw IoError("failed writing " + args.out);
  std::cerr << "wrote " << written << " records to " << args.out << '\n';
  return kExitOk;
}

struct PreprocessArgs {
  std::string in;
  std::string out;
  double smoothing_k = 0.5;
};

int run_preprocess(const PreprocessArgs& args) {
  std::vector<TweetRecord> records = load_corpus(args.in);
  PreprocessOptions options;
  options.k = args.smoothing_k;
  for (TweetRecord& record : records) {
    PreprocessOutput derived = preprocess(record.raw_text, options);
    record.clean_text = std::move(derived.clean_text);
    record.lemma_text = std::move(derived.lemma_text);
    record.lemma_text_length = derived.lemma_text_length;
    record.words = std::move(derived.words);
    validate_record(record);
  }
  save_corpus(records, args.out);
  std::cerr << "wrote " << records.size() << " records to " << args.out << '\n';
  return kExitOk;
}

struct CompileArgs {
  std::string query = "Q1";
  std::string scheme = "tfidf";
  std::string dialect = "sql";
  std::string scope = "filtered";
  std::string log_base = "natural";
  std::uint32_t k = 10;
  double smoothing_k = 0.5;
  double k1 = 1.2;
  double b = 0.75;
  std::string out;
  bool schema = false;
};

int run_compile(const CompileArgs& args) {
  std::string text;
  if (args.schema) {
    text = relational_schema_sql();
  } else {
    QuerySpec spec;
    spec.query_id = query_id_from_string(args.query);
    spec.scheme = scheme_from_string(args.scheme);
    spec.scope = scope_from_string(args.scope);
    spec.k = args.k;
    spec.params.k = args.smoothing_k;
    spec.params.k1 = args.k1;
    spec.params.b = args.b;
    spec.params.log_base = log_base_from_string(args.log_base);
    // Compilation emits placeholders, not bound values; the skeleton ranges
    // only mark which constraints the query carries.
    if (spec.query_id == QueryId::q2 || spec.query_id == QueryId::q4) {
      spec.date_range = DateRange{domain::date_min, domain::date_max};
    }
    if (spec.query_id == QueryId::q3 || spec.query_id == QueryId::q4) {
      spec.geo_box = GeoBox{domain::x_min, domain::x_max, domain::y_min,
                            domain::y_max};
    }
    CompiledQuery compiled;
    if (args.dialect == "sql") {
      compiled = to_sql(spec);
    } else if (args.dialect == "mr") {
      compiled = to_mapreduce(spec);
    } else {
      throw ValidationError("unknown dialect: " + args.dialect +
                            " (expected sql or mr)");
    }
    text = compiled.text;
  }
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + args.out);
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + args.out);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string config_path;
  std::vector<double> sf = {0.001};
  std::vector<std::string> corpus_paths;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t sampler_seed = kDefaultSeed;
  std::vector<std::string> queries = {"Q1", "Q2", "Q3", "Q4"};
  std::vector<std::string> schemes = {"tfidf", "okapi"};
  std::vector<std::string> layouts = {"relational", "document"};
  std::vector<std::string> strategies = {"na", "mr"};
  std::uint32_t runs = 40;
  bool fixed_binding = false;
  std::uint32_t k = 10;
  std::string scope = "filtered";
  double smoothing_k = 0.5;
  double k1 = 1.2;
  double b = 0.75;
  std::string log_base = "natural";
  std::string out_dir = ".";
  std::string format = "csv";
};

// Applies flat key=value config entries to the bench subcommand's options.
// Values from the file fill in only options the command line left untouched,
// so flags always take precedence.
void apply_config_defaults(CLI::App& command, const std::string& path) {
  if (path.empty()) return;
  if (!std::filesystem::exists(path)) {
    throw ValidationError("cannot open config file: " + path);
  }
  const std::vector<CLI::ConfigItem> items = CLI::ConfigINI{}.from_file(path);
  for (const CLI::ConfigItem& item : items) {
    if (!item.parents.empty()) {
      throw ValidationError("config keys must be flat key=value pairs: " +
                            item.fullname());
    }
    CLI::Option* option = command.get_option_no_throw("--" + item.name);
    if (option == nullptr) {
      throw ValidationError("unknown config key: " + item.name);
    }
    if (option->count() > 0) continue;  // the command line already set it
    for (const std::string& input : item.inputs) option->add_result(input);
    option->run_callback();
  }
}

int run_bench_command(const BenchArgs& args) {
  BenchPlan plan;
  plan.scale_factors = args.sf;
  plan.queries.clear();
  for (const std::string& q : args.queries) {
    plan.queries.push_back(query_id_from_string(q));
  }
  plan.schemes.clear();
  for (const std::string& s : args.schemes) {
    plan.schemes.push_back(scheme_from_string(s));
  }
  plan.layouts.clear();
  for (const std::string& l : args.layouts) {
    plan.layouts.push_back(layout_from_string(l));
  }
  plan.strategies.clear();
  for (const std::string& s : args.strategies) {
    plan.strategies.push_back(strategy_from_string(s));
  }
  plan.runs_per_query = args.runs;
  plan.parameter_sampler_seed = args.sampler_seed;
  plan.fixed_binding = args.fixed_binding;
  plan.k = args.k;
  plan.scope = scope_from_string(args.scope);
  plan.params.k = args.smoothing_k;
  plan.params.k1 = args.k1;
  plan.params.b = args.b;
  plan.params.log_base = log_base_from_string(args.log_base);

  if (args.format != "csv" && args.format != "json" && args.format != "both") {
    throw ValidationError("unknown report format: " + args.format +
                          " (expected csv, json, or both)");
  }

  CorpusSource source;
  if (!args.corpus_paths.empty()) {
    if (args.corpus_paths.size() != plan.scale_factors.size()) {
      throw ValidationError(
          "corpus paths must pair one-to-one with scale factors");
    }
    std::vector<std::pair<double, std::string>> by_sf;
    for (std::size_t i = 0; i < args.corpus_paths.size(); ++i) {
      by_sf.emplace_back(plan.scale_factors[i], args.corpus_paths[i]);
    }
    source = [by_sf](ScaleFactor sf) {
      for (const auto& [value, path] : by_sf) {
        if (value == sf.value) return load_corpus(path);
      }
      throw ValidationError("no corpus path registered for this scale factor");
    };
  } else {
    PreprocessOptions pre;
    pre.k = plan.params.k;
    source = generated_source(args.seed, pre);
  }

  BenchReport report = run_bench(plan, source);

  std::filesystem::path dir(args.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  if (args.format == "csv" || args.format == "both") {
    const auto raw_path = dir / "bench_raw.csv";
    const auto agg_path = dir / "bench_aggregates.csv";
    write_report_csv_files(report, raw_path, agg_path);
    std::cerr << "wrote " << raw_path.string() << " and " << agg_path.string()
              << '\n';
  }
  if (args.format == "json" || args.format == "both") {
    const auto json_path = dir / "bench_report.json";
    write_report_json_file(report, json_path);
    std::cerr << "wrote " << json_path.string() << '\n';
  }
  return kExitOk;
}

struct ReportArgs {
  std::string in;
  std::string format = "csv";
  std::string out_dir;
};

int run_report(const ReportArgs& args) {
  BenchReport report = read_report_json_file(args.in);
  if (args.format == "csv") {
    if (args.out_dir.empty()) {
      write_report_csv(report, std::cout);
    } else {
      std::filesystem::path dir(args.out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw IoError("cannot create output directory: " + dir.string());
      write_report_csv_files(report, dir / "report_raw.csv",
                             dir / "report_aggregates.csv");
      std::cerr << "wrote " << (dir / "report_raw.csv").string() << " and "
                << (dir / "report_aggregates.csv").string() << '\n';
    }
  } else if (args.format == "json") {
    if (args.out_dir.empty()) {
      write_report_json(report, std::cout);
    } else {
      std::filesystem::path dir(args.out_dir);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw IoError("cannot create output directory: " + dir.string());
      write_report_json_file(report, dir / "report.json");
      std::cerr << "wrote " << (dir / "report.json").string() << '\n';
    }
  } else {
    throw ValidationError("unknown report format: " + args.format +
                          " (expected csv or json)");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top-k keywords benchmark toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a deterministic synthetic corpus as JSON lines");
  generate->add_option("--sf", generate_args.sf,
                       "Scale factor; the corpus holds round(sf * 1e6) tweets")
      ->capture_default_str();
  generate->add_option("--seed", generate_args.seed, "Generator seed")
      ->capture_default_str();
  generate->add_option("--out", generate_args.out, "Output JSONL path")
      ->required();
  generate->add_option("--K", generate_args.smoothing_k,
                       "TF smoothing constant in [0, 1)")
      ->capture_default_str();

  PreprocessArgs preprocess_args;
  CLI::App* preprocess_cmd = app.add_subcommand(
      "preprocess", "Re-derive clean text, lemmas, and term stats for a corpus");
  preprocess_cmd->add_option("--in", preprocess_args.in, "Input JSONL path")
      ->required();
  preprocess_cmd->add_option("--out", preprocess_args.out, "Output JSONL path")
      ->required();
  preprocess_cmd
      ->add_option("--K", preprocess_args.smoothing_k,
                   "TF smoothing constant in [0, 1)")
      ->capture_default_str();

  CompileArgs compile_args;
  CLI::App* compile_cmd = app.add_subcommand(
      "compile", "Compile a query to SQL text or a MapReduce plan");
  compile_cmd->add_option("--query", compile_args.query, "Q1, Q2, Q3, or Q4")
      ->capture_default_str();
  compile_cmd->add_option("--scheme", compile_args.scheme, "tfidf or okapi")
      ->capture_default_str();
  compile_cmd->add_option("--dialect", compile_args.dialect, "sql or mr")
      ->capture_default_str();
  compile_cmd->add_option("--scope", compile_args.scope, "filtered or global")
      ->capture_default_str();
  compile_cmd->add_option("--k", compile_args.k, "Result size")
      ->capture_default_str();
  compile_cmd->add_option("--K", compile_args.smoothing_k,
                          "TF smoothing constant in [0, 1)")
      ->capture_default_str();
  compile_cmd->add_option("--k1", compile_args.k1, "Okapi saturation, [1.2, 2.0]")
      ->capture_default_str();
  compile_cmd->add_option("--b", compile_args.b,
                          "Okapi length normalization, [0, 1]")
      ->capture_default_str();
  compile_cmd
      ->add_option("--log-base", compile_args.log_base, "natural or base10")
      ->capture_default_str();
  compile_cmd->add_option("--out", compile_args.out,
                          "Write to this file instead of stdout");
  compile_cmd->add_flag("--schema", compile_args.schema,
                        "Print the relational schema DDL instead");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Run the measurement protocol and write reports");
  bench_cmd->add_option("--config", bench_args.config_path,
                        "Flat key=value config file; flags take precedence");
  bench_cmd->add_option("--sf", bench_args.sf, "Scale factors")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--corpus", bench_args.corpus_paths,
                   "Corpus JSONL path per scale factor (skips generation)")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench_args.seed, "Corpus generator seed")
      ->capture_default_str();
  bench_cmd
      ->add_option("--sampler-seed", bench_args.sampler_seed,
                   "Query parameter sampler seed")
      ->capture_default_str();
  bench_cmd->add_option("--queries", bench_args.queries, "Subset of Q1..Q4")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--schemes", bench_args.schemes, "tfidf, okapi")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--layouts", bench_args.layouts, "relational, document")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--strategies", bench_args.strategies, "na, mr")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--runs", bench_args.runs, "Measured runs per query")
      ->capture_default_str();
  bench_cmd->add_flag("--fixed-binding", bench_args.fixed_binding,
                      "Reuse one parameter binding for all runs of a query");
  bench_cmd->add_option("--k", bench_args.k, "Result size")
      ->capture_default_str();
  bench_cmd->add_option("--scope", bench_args.scope, "filtered or global")
      ->capture_default_str();
  bench_cmd->add_option("--K", bench_args.smoothing_k,
                        "TF smoothing constant in [0, 1)")
      ->capture_default_str();
  bench_cmd->add_option("--k1", bench_args.k1, "Okapi saturation, [1.2, 2.0]")
      ->capture_default_str();
  bench_cmd->add_option("--b", bench_args.b, "Okapi length normalization, [0, 1]")
      ->capture_default_str();
  bench_cmd->add_option("--log-base", bench_args.log_base, "natural or base10")
      ->capture_default_str();
  bench_cmd->add_option("--out-dir", bench_args.out_dir, "Report directory")
      ->capture_default_str();
  bench_cmd->add_option("--format", bench_args.format, "csv, json, or both")
      ->capture_default_str();

  ReportArgs report_args;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "Convert a JSON bench report to CSV or normalized JSON");
  report_cmd->add_option("--in", report_args.in, "Input report JSON path")
      ->required();
  report_cmd->add_option("--format", report_args.format, "csv or json")
      ->capture_default_str();
  report_cmd->add_option("--out-dir", report_args.out_dir,
                         "Write files here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (*generate) return guarded([&] { return run_generate(generate_args); });
  if (*preprocess_cmd) {
    return guarded([&] { return run_preprocess(preprocess_args); });
  }
  if (*compile_cmd) return guarded([&] { return run_compile(compile_args); });
  if (*bench_cmd) {
    return guarded([&] {
      apply_config_defaults(*bench_cmd, bench_args.config_path);
      return run_bench_command(bench_args);
    });
  }
  if (*report_cmd) return guarded([&] { return run_report(report_args); });
  return kExitValidation;
}
