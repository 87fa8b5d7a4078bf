#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topkbench/rng.hpp"

namespace topkbench::detail {

std::size_t template_count();
std::string_view template_text(std::size_t index);

/// Fills the {slot} markers of one template, drawing from the word pools.
std::string render_template(std::string_view tpl, SplitMix64& rng);

/// Draws a template uniformly and renders it.
std::string render_tweet(SplitMix64& rng);

const std::vector<std::string_view>& male_first_names();
const std::vector<std::string_view>& female_first_names();
const std::vector<std::string_view>& last_names();

}  // namespace topkbench::detail
