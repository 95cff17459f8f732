#pragma once

#include <json.hpp>

#include "hermlie/weight.hpp"

namespace hermlie {

/// Weights serialize as arrays of exact "num/den" strings.
inline nlohmann::json weight_json(const Weight& w) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : w.coords()) a.push_back(rat_string(x));
    return a;
}

inline Weight weight_from_json(const nlohmann::json& a) {
    std::vector<Rat> c;
    for (const auto& s : a) c.push_back(parse_rat(s.get<std::string>()));
    return Weight(std::move(c));
}

}  // namespace hermlie
