#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plaus/credal.hpp"
#include "plaus/evidence.hpp"

namespace plaus {

/// One entry of a scenario's "queries" array, validated on load.
struct Query {
    std::string op;
    nlohmann::json args;
};

/// Scenario file contents. Numbers are eps-expression strings, never JSON
/// numbers, so nothing passes through binary floating point.
///
///     {"frame": ["a", "b"],
///      "bodies": [{"name": "m", "masses": [{"set": ["a"], "mass": "1/2"}, ...]}],
///      "credals": [{"name": "c", "dists": [{"a": "1 - eps", "b": "eps"}]}],
///      "queries": [{"op": "combine", "rule": "dempster", "bodies": ["m", "m"]}]}
///
/// Atoms missing from a distribution have probability 0.
struct Scenario {
    Frame frame;
    std::map<std::string, MassFunction> bodies;
    std::map<std::string, CredalSet> credals;
    std::vector<Query> queries;

    const MassFunction& body(std::string_view name) const;
    const CredalSet& credal(std::string_view name) const;
};

/// Throws Error(Errc::parse) for malformed JSON and Error(Errc::validation)
/// (or unknown_atom) with a path such as "bodies[0].masses[1].set[0]" for
/// the first invalid entry.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Operation names accepted in "queries".
const std::vector<std::string>& query_ops();

}  // namespace plaus
