#pragma once

#include <json.hpp>

#include "unibound/audit.hpp"
#include "unibound/bounds.hpp"
#include "unibound/suite.hpp"

namespace unibound {

[[nodiscard]] nlohmann::json to_json(const ShapeClass& shape);
[[nodiscard]] nlohmann::json to_json(const BoundResult& bound);
[[nodiscard]] nlohmann::json to_json(const Check& check);
[[nodiscard]] nlohmann::json to_json(const AuditReport& report);
[[nodiscard]] nlohmann::json to_json(const TrialConfig& config);
/// Contains no timing or thread information, so equal runs serialize equally.
[[nodiscard]] nlohmann::json to_json(const SuiteSummary& summary);
[[nodiscard]] nlohmann::json to_json(const ComparisonSummary& summary);

}  // namespace unibound
