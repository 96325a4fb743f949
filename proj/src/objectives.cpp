#include "riskfront/objectives.hpp"
#include "riskfront/errors.hpp"

#include <string>

namespace riskfront {

double total_cost(const Distribution& dist, const Scenario& scen)
{
    check_dimension(dist, scen);
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += scen.mean_demand_rate[i] * scen.suppliers[i].unit_cost * static_cast<double>(dist[i]);
    }
    return scen.period_of_interest * acc;
}

bool is_feasible(const Distribution& dist, const Scenario& scen, bool relax)
{
    check_dimension(dist, scen);
    Units sum = 0;
    double linear_cost = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] < 0 || dist[i] > scen.demand) {
            return false;
        }
        sum += dist[i];
        linear_cost += scen.suppliers[i].unit_cost * static_cast<double>(dist[i]);
    }
    if (sum != scen.demand) {
        return false;
    }
    return relax || linear_cost <= scen.retailer_coefficient * static_cast<double>(scen.demand);
}

std::vector<double> marginal_failure_probabilities(const Distribution& dist, const Scenario& scen)
{
    check_dimension(dist, scen);
    std::vector<double> p(dist.size());
    const auto d = static_cast<double>(scen.demand);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        p[i] = static_cast<double>(dist[i]) / d;
    }
    return p;
}

StructuralValues structural_values(const StructuralProfile& profile, double share)
{
    if (profile.empty()) {
        throw ConfigError("structural profile has no breakpoints");
    }
    const auto bps = profile.breakpoints();
    StructuralValues v{bps.front().alpha, bps.front().beta};
    for (const auto& b : bps) {
        if (b.threshold <= share) {
            v = {b.alpha, b.beta};
        } else {
            break;
        }
    }
    return v;
}

double risk_index(const Distribution& dist, const Scenario& scen)
{
    check_distribution(dist, scen);
    const auto d = static_cast<double>(scen.demand);
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double share = static_cast<double>(dist[i]) / d;
        const auto sv = structural_values(scen.suppliers[i].profile, share);
        acc += sv.alpha * sv.beta * share;
    }
    return acc;
}

double risk_index(const Distribution& dist, Units demand, std::span<const StructuralValues> structural)
{
    if (structural.size() != dist.size()) {
        throw InputError("need one alpha/beta pair per supplier");
    }
    if (demand < 1) {
        throw InputError("demand must be positive");
    }
    const auto d = static_cast<double>(demand);
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double share = static_cast<double>(dist[i]) / d;
        acc += structural[i].alpha * structural[i].beta * share;
    }
    return acc;
}

ObjectivePoint objective_point(const Distribution& dist, const Scenario& scen)
{
    return {total_cost(dist, scen), risk_index(dist, scen)};
}

NormalizedPoint normalize(const ObjectivePoint& point, const Scenario& scen)
{
    const double cost_scale = scen.max_unit_cost() * static_cast<double>(scen.demand);
    const auto n = static_cast<double>(scen.supplier_count());
    return {point.total_cost / cost_scale, point.risk_index / n};
}

double fitness(const ObjectivePoint& point, const Scenario& scen)
{
    const auto& w = scen.weights;
    if (!(w.cost + w.risk > 0.0)) {
        throw ConfigError("fitness weights sum to zero");
    }
    const auto p = normalize(point, scen);
    return 1.0 - (w.cost * p.cost + w.risk * p.risk);
}

double fitness(const Distribution& dist, const Scenario& scen)
{
    return fitness(objective_point(dist, scen), scen);
}

double objective_fitness(Objective objective, const ObjectivePoint& point, const Scenario& scen)
{
    switch (objective) {
    case Objective::weighted:
        return fitness(point, scen);
    case Objective::cost:
        return 1.0 - normalize(point, scen).cost;
    case Objective::risk:
        return 1.0 - normalize(point, scen).risk;
    }
    return 0.0;
}

const char* to_string(Objective objective)
{
    switch (objective) {
    case Objective::weighted: return "weighted";
    case Objective::cost: return "cost";
    case Objective::risk: return "risk";
    }
    return "?";
}

Objective parse_objective(std::string_view name)
{
    if (name == "weighted") return Objective::weighted;
    if (name == "cost") return Objective::cost;
    if (name == "risk") return Objective::risk;
    throw ConfigError("unknown objective '" + std::string(name) + "' (expected cost, risk or weighted)");
}

} // namespace riskfront
