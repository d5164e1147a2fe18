#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace lrbq {

/// Outcome of one verification with expected/actual renderings.
struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

inline bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

inline nlohmann::json to_json(const Check& c) {
    return {{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}};
}

inline nlohmann::json to_json(const std::vector<Check>& checks) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : checks) a.push_back(to_json(c));
    return a;
}

}  // namespace lrbq
