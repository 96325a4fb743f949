#pragma once

#include "riskfront/model.hpp"

#include "json.hpp"

#include <filesystem>

namespace riskfront {

/// Scenario documents look like
///
///   { "suppliers": [ {"unit_cost": 2, "profile": [[0, 0.1, 0.1], ...]}, ... ],
///     "demand": 100, "retailer_coefficient": 4, "weights": [0.5, 0.5],
///     "period_of_interest": 1, "mean_demand_rate": 1 }
///
/// `profile` falls back to the standard table when omitted and
/// `mean_demand_rate` is either one number or one entry per supplier.
/// Unknown keys are rejected. Throws ConfigError on schema violations.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scen);

Scenario load_scenario(const std::filesystem::path& path);

} // namespace riskfront
