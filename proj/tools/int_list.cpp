#include "int_list.hpp"

#include <sstream>
#include <stdexcept>

namespace teamfuse::cli {

namespace {

std::size_t parse_one(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("expected a non-negative integer, got '" + token + "'");
    }
    return std::stoul(token);
}

}  // namespace

std::vector<std::size_t> parse_int_list(const std::string& spec) {
    std::vector<std::size_t> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            values.push_back(parse_one(item));
            continue;
        }
        const std::size_t lo = parse_one(item.substr(0, dots));
        const std::size_t hi = parse_one(item.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("descending range '" + item + "'");
        for (std::size_t v = lo; v <= hi; ++v) values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("empty integer list");
    return values;
}

}  // namespace teamfuse::cli
