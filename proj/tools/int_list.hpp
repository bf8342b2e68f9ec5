#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace teamfuse::cli {

/// Parses "20", "2..10" (inclusive) or "10,20,40". Throws
/// std::invalid_argument on malformed input or descending ranges.
std::vector<std::size_t> parse_int_list(const std::string& spec);

}  // namespace teamfuse::cli
