#include "riskfront/kernels.hpp"
#include "riskfront/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string_view>

namespace riskfront::kernels {

namespace {

// -1: no override, otherwise the Isa value.
std::atomic<int> g_override{-1};

bool cpu_has_avx2()
{
#if defined(RISKFRONT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

} // namespace

const char* to_string(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "?";
}

Isa detected_isa()
{
    static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
    return isa;
}

Isa active_isa()
{
    if (int o = g_override.load(std::memory_order_relaxed); o >= 0) {
        return static_cast<Isa>(o);
    }
    if (const char* env = std::getenv("RISKFRONT_SIMD"); env && std::string_view(env) == "scalar") {
        return Isa::scalar;
    }
    return detected_isa();
}

void set_isa_override(std::optional<Isa> isa)
{
    if (isa && *isa == Isa::avx2 && detected_isa() != Isa::avx2) {
        throw ConfigError("avx2 kernels are not available on this machine");
    }
    g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> isas{Isa::scalar};
    if (detected_isa() == Isa::avx2) {
        isas.push_back(Isa::avx2);
    }
    return isas;
}

EvalTables EvalTables::from(const Scenario& scen)
{
    EvalTables t;
    t.suppliers = scen.supplier_count();
    t.period = scen.period_of_interest;
    t.demand = static_cast<double>(scen.demand);
    for (const auto& s : scen.suppliers) {
        t.steps = std::max(t.steps, s.profile.breakpoints().size());
    }
    t.thresholds.assign(t.suppliers * t.steps, std::numeric_limits<double>::infinity());
    t.alphas.assign(t.suppliers * t.steps, 0.0);
    t.betas.assign(t.suppliers * t.steps, 0.0);
    for (std::size_t i = 0; i < t.suppliers; ++i) {
        const auto& s = scen.suppliers[i];
        t.unit_cost.push_back(s.unit_cost);
        t.cost_weight.push_back(scen.mean_demand_rate.at(i) * s.unit_cost);
        const auto bps = s.profile.breakpoints();
        if (bps.empty()) {
            throw ConfigError("structural profile has no breakpoints");
        }
        for (std::size_t k = 0; k < t.steps; ++k) {
            const auto& b = bps[std::min(k, bps.size() - 1)];
            if (k < bps.size()) {
                t.thresholds[i * t.steps + k] = b.threshold;
            }
            t.alphas[i * t.steps + k] = b.alpha;
            t.betas[i * t.steps + k] = b.beta;
        }
    }
    return t;
}

void evaluate_batch(const EvalTables& tables, std::span<const double> columns, std::size_t rows,
                    const BatchOutput& out)
{
    evaluate_batch(active_isa(), tables, columns, rows, out);
}

void evaluate_batch(Isa isa, const EvalTables& tables, std::span<const double> columns, std::size_t rows,
                    const BatchOutput& out)
{
    if (columns.size() < tables.suppliers * rows || out.cost.size() < rows || out.risk.size() < rows ||
        out.linear_cost.size() < rows) {
        throw InputError("batch buffers are smaller than the row count");
    }
    if (rows == 0) {
        return;
    }
    switch (isa) {
#if defined(RISKFRONT_HAVE_AVX2)
    case Isa::avx2:
        avx2::evaluate_batch(tables, columns.data(), rows, out.cost.data(), out.risk.data(),
                             out.linear_cost.data());
        return;
#endif
    default:
        scalar::evaluate_batch(tables, columns.data(), rows, out.cost.data(), out.risk.data(),
                               out.linear_cost.data());
    }
}

void nearest_distances(std::span<const double> ax, std::span<const double> ay, std::span<const double> bx,
                       std::span<const double> by, std::span<double> out)
{
    nearest_distances(active_isa(), ax, ay, bx, by, out);
}

void nearest_distances(Isa isa, std::span<const double> ax, std::span<const double> ay,
                       std::span<const double> bx, std::span<const double> by, std::span<double> out)
{
    if (ax.size() != ay.size() || bx.size() != by.size() || out.size() < ax.size()) {
        throw InputError("nearest_distances: mismatched coordinate arrays");
    }
    if (bx.empty()) {
        throw InputError("nearest_distances: target set is empty");
    }
    switch (isa) {
#if defined(RISKFRONT_HAVE_AVX2)
    case Isa::avx2:
        avx2::nearest_distances(ax.data(), ay.data(), ax.size(), bx.data(), by.data(), bx.size(), out.data());
        return;
#endif
    default:
        scalar::nearest_distances(ax.data(), ay.data(), ax.size(), bx.data(), by.data(), bx.size(), out.data());
    }
}

} // namespace riskfront::kernels
