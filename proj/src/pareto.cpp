#include "riskfront/pareto.hpp"
#include "riskfront/errors.hpp"
#include "riskfront/kernels.hpp"
#include "riskfront/parallel.hpp"
#include "riskfront/rng.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

namespace riskfront {

namespace {

constexpr std::uint64_t kCostTag = 1;
constexpr std::uint64_t kRiskTag = 2;

std::vector<FrontPoint> feasible_points(std::span<const Individual> population, PointOrigin origin)
{
    std::vector<FrontPoint> out;
    for (const auto& ind : population) {
        if (ind.feasible) {
            out.push_back({ind.distribution, ind.point, origin});
        }
    }
    return out;
}

std::vector<FrontPoint> merged_front(std::span<const FrontPoint> a, std::span<const FrontPoint> b)
{
    std::vector<FrontPoint> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return front_filter(all);
}

std::vector<NormalizedPoint> normalized(std::span<const FrontPoint> front, const Scenario& scen)
{
    std::vector<NormalizedPoint> out;
    out.reserve(front.size());
    for (const auto& f : front) {
        out.push_back(normalize(f.point, scen));
    }
    return out;
}

double mean_nearest(std::span<const NormalizedPoint> from, std::span<const NormalizedPoint> to)
{
    std::vector<double> ax, ay, bx, by;
    for (const auto& p : from) {
        ax.push_back(p.cost);
        ay.push_back(p.risk);
    }
    for (const auto& p : to) {
        bx.push_back(p.cost);
        by.push_back(p.risk);
    }
    std::vector<double> nearest(from.size());
    kernels::nearest_distances(ax, ay, bx, by, nearest);
    return std::accumulate(nearest.begin(), nearest.end(), 0.0) / static_cast<double>(nearest.size());
}

} // namespace

std::vector<FrontPoint> front_filter(std::span<const FrontPoint> points)
{
    std::vector<const FrontPoint*> order;
    order.reserve(points.size());
    for (const auto& p : points) {
        order.push_back(&p);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const FrontPoint* a, const FrontPoint* b) { return a->distribution < b->distribution; });
    ParetoArchive archive;
    for (const auto* p : order) {
        archive.offer(*p);
    }
    return std::move(archive).release();
}

double pareto_distance(std::span<const NormalizedPoint> a, std::span<const NormalizedPoint> b)
{
    if (a.empty() || b.empty()) {
        throw InputError("pareto_distance needs two non-empty fronts");
    }
    return 0.5 * (mean_nearest(a, b) + mean_nearest(b, a));
}

double pareto_distance(std::span<const FrontPoint> a, std::span<const FrontPoint> b, const Scenario& scen)
{
    const auto na = normalized(a, scen);
    const auto nb = normalized(b, scen);
    return pareto_distance(na, nb);
}

ParetoRun pareto_optimize(const Scenario& scen, const GaConfig& cfg, const ParetoOptions& opts)
{
    scen.validate();
    cfg.validate();

    GaConfig cost_cfg = cfg;
    cost_cfg.seed = mix_seed(cfg.seed, kCostTag);
    GaConfig risk_cfg = cfg;
    risk_cfg.seed = mix_seed(cfg.seed, kRiskTag);

    // Per-generation fronts of each run, only collected for indicators.
    std::vector<std::vector<FrontPoint>> cost_fronts, risk_fronts;
    auto observer_for = [&](std::vector<std::vector<FrontPoint>>& sink, PointOrigin origin) -> GenerationObserver {
        if (!opts.indicators) {
            return {};
        }
        return [&sink, origin](const GenerationStats&, std::span<const Individual> population) {
            sink.push_back(front_filter(feasible_points(population, origin)));
        };
    };

    ParetoRun run;
    if (resolve_threads(opts.threads) > 1) {
        auto cost_future = std::async(std::launch::async, [&] {
            return run_ga(scen, cost_cfg, Objective::cost, observer_for(cost_fronts, PointOrigin::cost_run));
        });
        run.risk_run = run_ga(scen, risk_cfg, Objective::risk, observer_for(risk_fronts, PointOrigin::risk_run));
        run.cost_run = cost_future.get();
    } else {
        run.cost_run = run_ga(scen, cost_cfg, Objective::cost, observer_for(cost_fronts, PointOrigin::cost_run));
        run.risk_run = run_ga(scen, risk_cfg, Objective::risk, observer_for(risk_fronts, PointOrigin::risk_run));
    }

    auto candidates = feasible_points(run.cost_run.final_population, PointOrigin::cost_run);
    const auto risk_points = feasible_points(run.risk_run.final_population, PointOrigin::risk_run);
    candidates.insert(candidates.end(), risk_points.begin(), risk_points.end());
    if (candidates.empty()) {
        throw InfeasibleError("no feasible distribution survived either run at demand " +
                              std::to_string(scen.demand));
    }

    auto cheaper = [](const FrontPoint& a, const FrontPoint& b) {
        if (a.point.total_cost != b.point.total_cost) return a.point.total_cost < b.point.total_cost;
        if (a.point.risk_index != b.point.risk_index) return a.point.risk_index < b.point.risk_index;
        return a.distribution < b.distribution;
    };
    auto safer = [](const FrontPoint& a, const FrontPoint& b) {
        if (a.point.risk_index != b.point.risk_index) return a.point.risk_index < b.point.risk_index;
        if (a.point.total_cost != b.point.total_cost) return a.point.total_cost < b.point.total_cost;
        return a.distribution < b.distribution;
    };
    const auto& by_cost = *std::min_element(candidates.begin(), candidates.end(), cheaper);
    const auto& by_risk = *std::min_element(candidates.begin(), candidates.end(), safer);

    auto& r = run.result;
    r.argmin_cost = by_cost.distribution;
    r.argmin_risk = by_risk.distribution;
    r.min_cost = by_cost.point.total_cost;
    r.min_risk = by_risk.point.risk_index;
    r.max_cost = by_risk.point.total_cost;
    r.front = front_filter(candidates);

    if (opts.indicators) {
        const std::size_t generations = std::max(cost_fronts.size(), risk_fronts.size());
        for (std::size_t g = 0; g < generations; ++g) {
            const auto& a = cost_fronts[std::min(g, cost_fronts.size() - 1)];
            const auto& b = risk_fronts[std::min(g, risk_fronts.size() - 1)];
            run.generation_fronts.push_back(merged_front(a, b));
        }
        for (std::size_t g = 1; g < run.generation_fronts.size(); ++g) {
            const auto& prev = run.generation_fronts[g - 1];
            const auto& cur = run.generation_fronts[g];
            if (prev.empty() || cur.empty()) {
                break;
            }
            run.indicators.push_back(pareto_distance(prev, cur, scen));
        }
    }
    return run;
}

SweepResult sweep(const Scenario& scen_template, std::span<const Units> demands, const GaConfig& cfg,
                  const ParetoOptions& opts)
{
    if (demands.empty()) {
        throw ConfigError("sweep needs at least one demand");
    }
    for (std::size_t k = 0; k < demands.size(); ++k) {
        if (demands[k] < 1) {
            throw ConfigError("sweep demands must be positive");
        }
        if (k > 0 && demands[k] <= demands[k - 1]) {
            throw ConfigError("sweep demands must be strictly increasing");
        }
    }

    SweepResult out;
    out.entries.resize(demands.size());
    const unsigned workers = resolve_threads(opts.threads);
    ParetoOptions inner = opts;
    inner.threads = demands.size() > 1 ? 1 : opts.threads;
    for_each_chunk(demands.size(), workers, [&](std::size_t k) {
        out.entries[k] = {demands[k], pareto_optimize(scen_template.with_demand(demands[k]), cfg, inner)};
    });
    return out;
}

} // namespace riskfront
