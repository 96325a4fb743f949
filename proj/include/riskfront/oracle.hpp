#pragma once

#include "riskfront/evaluator.hpp"
#include "riskfront/front.hpp"
#include "riskfront/model.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace riskfront {

// Exhaustive search refuses instances with more compositions than this.
inline constexpr std::uint64_t kEnumerationLimit = 100'000'000;

struct EnumerationReport {
    std::uint64_t feasible_count = 0;
    std::uint64_t relaxed_count = 0;
    Units demand = 0;
};

// C(d + n - 1, n - 1), saturating at UINT64_MAX.
std::uint64_t composition_count(Units demand, std::size_t suppliers);

// Throws CapacityError when the scenario is too large to enumerate.
void check_enumeration_capacity(const Scenario& scen);

// Advances x to the next composition of the same total in lexicographic
// order. Returns false (leaving x unchanged) at the last one, (d, 0, ..., 0).
bool next_composition(std::span<Units> x);

using CompositionVisitor = std::function<void(std::span<const Units> shares, const Evaluation& eval)>;

/// Streams every composition of the demand that passes is_feasible(., relax),
/// in lexicographic order of (x_1, ..., x_n).
EnumerationReport enumerate(const Scenario& scen, bool relax, const CompositionVisitor& visit);

// Counts only; partitioned across `threads` workers (0 = automatic).
EnumerationReport count_feasible(const Scenario& scen, bool relax, unsigned threads = 0);

/// Non-dominated subset of the feasible compositions, ascending cost. For
/// equal objective points the lexicographically smallest distribution is kept.
std::vector<FrontPoint> exact_pareto_front(const Scenario& scen, bool relax, unsigned threads = 0);

/// Feasible composition with the highest weighted-sum fitness, ties broken
/// towards the lexicographically smallest. Throws InfeasibleError if none.
FrontPoint weighted_sum_optimum(const Scenario& scen, bool relax, unsigned threads = 0);

} // namespace riskfront
