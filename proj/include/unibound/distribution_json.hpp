#pragma once

#include <json.hpp>
#include <string>

#include "unibound/distribution.hpp"

namespace unibound {

// {"type":"discrete","points":[...],"probs":[...]}
// {"type":"piecewise","breakpoints":[...],"heights":[...]}
[[nodiscard]] nlohmann::json to_json(const Distribution& dist);

/// Throws InputError on schema or invariant violations.
[[nodiscard]] Distribution distribution_from_json(const nlohmann::json& j);
[[nodiscard]] Distribution parse_distribution(const std::string& text);
[[nodiscard]] Distribution load_distribution(const std::string& path);

}  // namespace unibound
