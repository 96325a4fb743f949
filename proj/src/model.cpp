#include "riskfront/model.hpp"
#include "riskfront/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace riskfront {

StructuralProfile::StructuralProfile(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {}

StructuralProfile StructuralProfile::standard()
{
    return StructuralProfile({
        {0.00, 0.1, 0.1},
        {0.15, 0.1, 0.2},
        {0.20, 0.2, 0.3},
        {0.30, 0.3, 0.4},
        {0.40, 0.4, 0.4},
        {0.45, 0.5, 0.5},
        {0.50, 0.8, 0.6},
        {0.60, 1.0, 0.8},
        {0.75, 1.0, 1.0},
    });
}

StructuralProfile StructuralProfile::constant(double alpha, double beta)
{
    return StructuralProfile({{0.0, alpha, beta}});
}

void StructuralProfile::validate() const
{
    if (breakpoints_.empty()) {
        throw ConfigError("structural profile has no breakpoints");
    }
    if (breakpoints_.front().threshold != 0.0) {
        throw ConfigError("structural profile must start at share 0");
    }
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
        const auto& b = breakpoints_[k];
        if (!in_unit(b.threshold) || !in_unit(b.alpha) || !in_unit(b.beta)) {
            throw ConfigError("structural profile breakpoint " + std::to_string(k) + " leaves [0,1]");
        }
        if (k > 0) {
            const auto& prev = breakpoints_[k - 1];
            if (b.threshold <= prev.threshold) {
                throw ConfigError("structural profile thresholds must be strictly increasing");
            }
            if (b.alpha < prev.alpha || b.beta < prev.beta) {
                throw ConfigError("structural profile alpha/beta must be non-decreasing");
            }
        }
    }
}

double Scenario::max_unit_cost() const
{
    double c = 0.0;
    for (const auto& s : suppliers) {
        c = std::max(c, s.unit_cost);
    }
    return c;
}

Scenario Scenario::with_demand(Units d) const
{
    Scenario copy = *this;
    copy.demand = d;
    return copy;
}

void Scenario::validate() const
{
    if (suppliers.size() < 2) {
        throw ConfigError("scenario needs at least two suppliers");
    }
    if (demand < 1) {
        throw ConfigError("demand must be a positive integer");
    }
    if (!(retailer_coefficient > 0.0) || !std::isfinite(retailer_coefficient)) {
        throw ConfigError("retailer_coefficient must be positive");
    }
    if (!(period_of_interest > 0.0) || !std::isfinite(period_of_interest)) {
        throw ConfigError("period_of_interest must be positive");
    }
    if (mean_demand_rate.size() != suppliers.size()) {
        throw ConfigError("mean_demand_rate needs one entry per supplier");
    }
    for (double mu : mean_demand_rate) {
        if (!(mu > 0.0) || !std::isfinite(mu)) {
            throw ConfigError("mean_demand_rate entries must be positive");
        }
    }
    if (!(weights.cost >= 0.0) || !(weights.risk >= 0.0) || !(weights.cost + weights.risk > 0.0)) {
        throw ConfigError("weights must be non-negative with a positive sum");
    }
    for (std::size_t i = 0; i < suppliers.size(); ++i) {
        if (!(suppliers[i].unit_cost > 0.0) || !std::isfinite(suppliers[i].unit_cost)) {
            throw ConfigError("supplier " + std::to_string(i + 1) + " unit_cost must be positive");
        }
        suppliers[i].profile.validate();
    }
}

Scenario Scenario::fig2(Units d)
{
    return with_costs({2.0, 3.0, 7.0}, d, 4.0);
}

Scenario Scenario::with_costs(std::initializer_list<double> costs, Units d, double retailer_coefficient)
{
    Scenario s;
    for (double c : costs) {
        s.suppliers.push_back(SupplierSpec{c, StructuralProfile::standard()});
    }
    s.demand = d;
    s.retailer_coefficient = retailer_coefficient;
    s.mean_demand_rate.assign(s.suppliers.size(), 1.0);
    return s;
}

Units Distribution::total() const noexcept
{
    return std::accumulate(shares_.begin(), shares_.end(), Units{0});
}

std::string Distribution::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < shares_.size(); ++i) {
        if (i) os << ',';
        os << shares_[i];
    }
    os << ']';
    return os.str();
}

void check_dimension(const Distribution& dist, const Scenario& scen)
{
    if (dist.size() != scen.supplier_count()) {
        throw InputError("distribution " + dist.to_string() + " has " + std::to_string(dist.size()) +
                         " shares but the scenario has " + std::to_string(scen.supplier_count()) +
                         " suppliers");
    }
}

void check_distribution(const Distribution& dist, const Scenario& scen)
{
    check_dimension(dist, scen);
    for (Units x : dist.shares()) {
        if (x < 0 || x > scen.demand) {
            throw InputError("distribution " + dist.to_string() + " has a share outside [0, demand]");
        }
    }
    if (dist.total() != scen.demand) {
        throw InputError("distribution " + dist.to_string() + " sums to " + std::to_string(dist.total()) +
                         ", expected demand " + std::to_string(scen.demand));
    }
}

} // namespace riskfront
