#pragma once

#include "riskfront/model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace riskfront {

// Where a front point came from; only used for reporting.
enum class PointOrigin : std::uint8_t { enumeration, cost_run, risk_run };

const char* to_string(PointOrigin origin);

struct FrontPoint {
    Distribution distribution;
    ObjectivePoint point;
    PointOrigin origin = PointOrigin::enumeration;
};

/// Strict Pareto dominance with both objectives minimised: a is no worse in
/// cost and risk and strictly better in at least one of them.
constexpr bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) noexcept
{
    return a.total_cost <= b.total_cost && a.risk_index <= b.risk_index &&
           (a.total_cost < b.total_cost || a.risk_index < b.risk_index);
}

/// Incrementally maintained two-objective non-dominated set.
///
/// Members are kept sorted by ascending cost, which for a mutually
/// non-dominating set means strictly descending risk. An offer whose objective
/// point equals a member's is rejected, so the first distribution offered for
/// a given point is the one kept.
class ParetoArchive {
public:
    // Returns true if the point was added.
    bool offer(FrontPoint candidate);

    std::span<const FrontPoint> points() const noexcept { return points_; }
    std::vector<FrontPoint> release() && { return std::move(points_); }
    std::size_t size() const noexcept { return points_.size(); }

private:
    std::vector<FrontPoint> points_;
};

} // namespace riskfront
