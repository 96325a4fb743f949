#pragma once

#include "riskfront/front.hpp"
#include "riskfront/ga.hpp"
#include "riskfront/model.hpp"
#include "riskfront/objectives.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace riskfront {

/// Summary of a two-objective run: the cheapest distribution found, the
/// least risky one, and what that least risky one costs.
struct ParetoResult {
    double min_cost = 0.0;
    double max_cost = 0.0; // total cost of argmin_risk
    double min_risk = 0.0;
    Distribution argmin_cost;
    Distribution argmin_risk;
    std::vector<FrontPoint> front; // non-dominated feasible members of both final populations
};

struct ParetoOptions {
    // Keep the merged front of every generation and the distance series between them.
    bool indicators = false;
    unsigned threads = 0;
};

struct ParetoRun {
    ParetoResult result;
    GaResult cost_run;
    GaResult risk_run;
    std::vector<std::vector<FrontPoint>> generation_fronts; // only with indicators
    std::vector<double> indicators; // indicators[g] = distance(front g+1, front g+2)

    std::uint64_t evaluations() const noexcept { return cost_run.evaluations + risk_run.evaluations; }
};

/// Runs the cost-only and risk-only optimizers (independent seeds derived from
/// cfg.seed) and assembles the min/max cost triple and merged front.
///
/// argmin_cost and argmin_risk are taken over the feasible members of both
/// final populations, so min_cost and min_risk bound every searched point.
ParetoRun pareto_optimize(const Scenario& scen, const GaConfig& cfg, const ParetoOptions& opts = {});

/// Maximal non-dominated subset, ascending cost. Points sharing an objective
/// point collapse to the one with the smallest distribution.
std::vector<FrontPoint> front_filter(std::span<const FrontPoint> points);

/// Symmetrised mean nearest-neighbour Euclidean distance between two point
/// sets. Throws InputError if either is empty.
double pareto_distance(std::span<const NormalizedPoint> a, std::span<const NormalizedPoint> b);

// Same, after mapping both fronts into normalised objective space.
double pareto_distance(std::span<const FrontPoint> a, std::span<const FrontPoint> b, const Scenario& scen);

struct SweepEntry {
    Units demand = 0;
    ParetoRun run;
};

struct SweepResult {
    std::vector<SweepEntry> entries; // strictly increasing demand
};

// pareto_optimize at each demand; demands must be non-empty and strictly increasing.
SweepResult sweep(const Scenario& scen_template, std::span<const Units> demands, const GaConfig& cfg,
                  const ParetoOptions& opts = {});

} // namespace riskfront
