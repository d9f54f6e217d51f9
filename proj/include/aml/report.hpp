#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aml/analysis.hpp"
#include "aml/catalog.hpp"
#include "aml/monoid.hpp"
#include "aml/rational.hpp"

namespace aml {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Machine-readable command report. Keys are emitted in sorted order and all
/// numbers that could be non-integral are rendered as exact rational strings,
/// so identical inputs and seed produce byte-identical output.
struct Report {
    std::vector<std::string> command;
    nlohmann::json results;
    std::optional<std::uint64_t> seed;
};

inline nlohmann::json to_json(const Point& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : p) arr.push_back(to_string(v));
    return arr;
}

inline nlohmann::json to_json(const CoordSpec& c) {
    switch (c.kind) {
        case CoordSpec::Kind::Fixed:
            return {{"kind", "fixed"}, {"value", to_string(c.value)}};
        case CoordSpec::Kind::Free: return {{"kind", "free"}};
        case CoordSpec::Kind::RootsOfUnity:
            return {{"kind", "roots_of_unity"},
                    {"order", c.order},
                    {"includes_zero", c.includes_zero}};
    }
    return {};
}

inline nlohmann::json to_json(const VarietyComponent& comp) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : comp.coords) coords.push_back(to_json(c));
    nlohmann::json j{{"label", comp.label}, {"dim", comp.dim}, {"coords", coords}};
    if (comp.binomial) {
        j["relation"] = {{"lhs", comp.binomial->first}, {"rhs", comp.binomial->second}};
    }
    return j;
}

/// Stable-key JSON text, one trailing newline, byte-identical across runs
/// for identical inputs and seed.
inline std::string emit_report(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["results"] = r.results;
    j["schema"] = kSchemaVersion;
    j["version"] = kToolVersion;
    if (r.seed) j["seed"] = *r.seed;
    return j.dump(2) + "\n";
}

}  // namespace aml
