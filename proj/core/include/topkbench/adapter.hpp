#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topkbench/qcompile.hpp"

namespace topkbench {

using BindingValue = std::variant<std::int64_t, double, std::string>;
using Bindings = std::map<std::string, BindingValue>;

/// Builds the binding set carrying the constraint values of a concrete spec.
Bindings bindings_for(const QuerySpec& spec);

struct RunOutcome {
  TopKResult result;
  double elapsed_ms = 0.0;
};

/// Contract that database drivers implement to execute compiled artifacts.
class BackendAdapter {
 public:
  virtual ~BackendAdapter() = default;

  virtual void prepare(const CompiledQuery& compiled) = 0;
  /// Repeatable after a single prepare.
  virtual RunOutcome run(const Bindings& bindings) = 0;
  virtual void close() = 0;
};

/// In-process interpreter of compiled artifacts, for conformance testing
/// without a live database: SQL artifacts execute against the relational
/// layout, plan artifacts against the document layout via map_reduce.
class ReferenceAdapter final : public BackendAdapter {
 public:
  explicit ReferenceAdapter(std::vector<TweetRecord> corpus);

  void prepare(const CompiledQuery& compiled) override;
  RunOutcome run(const Bindings& bindings) override;
  void close() override;

 private:
  std::vector<TweetRecord> corpus_;
  std::optional<RelationalLayout> relational_;
  std::optional<DocumentLayout> document_;
  std::optional<ParsedQuery> prepared_;
};

}  // namespace topkbench
