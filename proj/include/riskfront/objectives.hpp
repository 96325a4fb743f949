#pragma once

#include "riskfront/model.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace riskfront {

// xi * sum_i(mu_i * c_i * x_i).
double total_cost(const Distribution& dist, const Scenario& scen);

/// Demand balance, share bounds, and (unless relaxed) the cost ceiling
/// sum_i c_i x_i <= retailer_coefficient * demand.
bool is_feasible(const Distribution& dist, const Scenario& scen, bool relax);

// P_i = x_i / d.
std::vector<double> marginal_failure_probabilities(const Distribution& dist, const Scenario& scen);

StructuralValues structural_values(const StructuralProfile& profile, double share);

/// Risk index: sum_i alpha_i * beta_i * P_i with P_i = x_i / d and alpha/beta
/// looked up from each supplier's profile at its own share.
double risk_index(const Distribution& dist, const Scenario& scen);

// Same sum with caller-supplied alpha/beta per supplier instead of profiles.
double risk_index(const Distribution& dist, Units demand, std::span<const StructuralValues> structural);

/// Weighted-sum fitness, larger is better:
///   1 - (W1 * cost / (c_max * d) + W2 * risk / n)
double fitness(const Distribution& dist, const Scenario& scen);
double fitness(const ObjectivePoint& point, const Scenario& scen);

ObjectivePoint objective_point(const Distribution& dist, const Scenario& scen);

// Normalised coordinates used for distances: (cost / (c_max * d), risk / n).
struct NormalizedPoint {
    double cost = 0.0;
    double risk = 0.0;
};

NormalizedPoint normalize(const ObjectivePoint& point, const Scenario& scen);

/// The scalar each GA run maximises.
///
/// New objectives plug in here; everything downstream only sees fitness values.
enum class Objective { weighted, cost, risk };

double objective_fitness(Objective objective, const ObjectivePoint& point, const Scenario& scen);

const char* to_string(Objective objective);
Objective parse_objective(std::string_view name);

} // namespace riskfront
