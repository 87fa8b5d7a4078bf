#pragma once

#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace topkbench::detail {

const std::unordered_set<std::string_view>& stopword_set();
const std::unordered_map<std::string_view, std::string_view>& contraction_table();
const std::unordered_map<std::string_view, std::string_view>& lemma_exceptions();

}  // namespace topkbench::detail
