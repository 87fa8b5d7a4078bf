#include "topkbench/adapter.hpp"

#include <algorithm>
#include <chrono>

#include "topkbench/errors.hpp"

namespace topkbench {

namespace {

const BindingValue& require(const Bindings& bindings, const std::string& name) {
  const auto it = bindings.find(name);
  if (it == bindings.end()) throw ValidationError("missing binding " + name);
  return it->second;
}

std::string require_string(const Bindings& bindings, const std::string& name) {
  const auto& value = require(bindings, name);
  if (const auto* text = std::get_if<std::string>(&value)) return *text;
  throw ValidationError("binding " + name + " must be a string");
}

std::int64_t require_int(const Bindings& bindings, const std::string& name) {
  const auto& value = require(bindings, name);
  if (const auto* number = std::get_if<std::int64_t>(&value)) return *number;
  throw ValidationError("binding " + name + " must be an integer");
}

double require_number(const Bindings& bindings, const std::string& name) {
  const auto& value = require(bindings, name);
  if (const auto* real = std::get_if<double>(&value)) return *real;
  if (const auto* number = std::get_if<std::int64_t>(&value)) {
    return static_cast<double>(*number);
  }
  throw ValidationError("binding " + name + " must be numeric");
}

}  // namespace

Bindings bindings_for(const QuerySpec& spec) {
  Bindings bindings;
  bindings.emplace("pGender", std::string(to_string(spec.gender)));
  if (spec.date_range) {
    bindings.emplace("pStartDate", spec.date_range->start);
    bindings.emplace("pEndDate", spec.date_range->end);
  }
  if (spec.geo_box) {
    bindings.emplace("pStartX", spec.geo_box->start_x);
    bindings.emplace("pEndX", spec.geo_box->end_x);
    bindings.emplace("pStartY", spec.geo_box->start_y);
    bindings.emplace("pEndY", spec.geo_box->end_y);
  }
  return bindings;
}

ReferenceAdapter::ReferenceAdapter(std::vector<TweetRecord> corpus)
    : corpus_(std::move(corpus)) {}

void ReferenceAdapter::prepare(const CompiledQuery& compiled) {
  prepared_ = parse_compiled(compiled);
  if (prepared_->dialect == Dialect::ansi_sql) {
    if (!relational_) relational_ = build_relational(corpus_);
  } else {
    if (!document_) document_ = build_document(corpus_);
  }
}

RunOutcome ReferenceAdapter::run(const Bindings& bindings) {
  if (!prepared_) throw ValidationError("no prepared query");

  for (const auto& [name, value] : bindings) {
    (void)value;
    if (std::find(prepared_->placeholders.begin(), prepared_->placeholders.end(), name) ==
        prepared_->placeholders.end()) {
      throw ValidationError("unexpected binding " + name);
    }
  }

  QuerySpec spec;
  spec.query_id = prepared_->query_id;
  spec.scheme = prepared_->scheme;
  spec.scope = prepared_->scope;
  spec.k = prepared_->k;
  spec.params = prepared_->params;
  spec.gender = gender_from_string(require_string(bindings, "pGender"));
  if (prepared_->query_id == QueryId::q2 || prepared_->query_id == QueryId::q4) {
    spec.date_range = DateRange{require_int(bindings, "pStartDate"),
                                require_int(bindings, "pEndDate")};
  }
  if (prepared_->query_id == QueryId::q3 || prepared_->query_id == QueryId::q4) {
    spec.geo_box = GeoBox{require_number(bindings, "pStartX"),
                          require_number(bindings, "pEndX"),
                          require_number(bindings, "pStartY"),
                          require_number(bindings, "pEndY")};
  }

  const auto start = std::chrono::steady_clock::now();
  RunOutcome outcome;
  if (prepared_->dialect == Dialect::ansi_sql) {
    outcome.result = execute(*relational_, spec);
  } else {
    outcome.result = execute(*document_, spec, Strategy::map_reduce);
  }
  const auto stop = std::chrono::steady_clock::now();
  outcome.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return outcome;
}

void ReferenceAdapter::close() { prepared_.reset(); }

}  // namespace topkbench
