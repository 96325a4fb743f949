#include "riskfront/front.hpp"

#include <algorithm>

namespace riskfront {

const char* to_string(PointOrigin origin)
{
    switch (origin) {
    case PointOrigin::enumeration: return "enumeration";
    case PointOrigin::cost_run: return "cost_run";
    case PointOrigin::risk_run: return "risk_run";
    }
    return "?";
}

bool ParetoArchive::offer(FrontPoint candidate)
{
    const auto& p = candidate.point;
    auto by_cost = [](const FrontPoint& f, double cost) { return f.point.total_cost < cost; };

    // The member with the largest cost <= p.cost has the lowest risk among all
    // members that are no more expensive than p.
    auto upper = std::upper_bound(points_.begin(), points_.end(), p.total_cost,
                                  [](double cost, const FrontPoint& f) { return cost < f.point.total_cost; });
    if (upper != points_.begin() && std::prev(upper)->point.risk_index <= p.risk_index) {
        return false;
    }

    // Members with cost >= p.cost and risk >= p.risk are now dominated; they
    // form a contiguous run because risk descends along the archive.
    auto first = std::lower_bound(points_.begin(), points_.end(), p.total_cost, by_cost);
    auto last = first;
    while (last != points_.end() && last->point.risk_index >= p.risk_index) {
        ++last;
    }
    auto pos = points_.erase(first, last);
    points_.insert(pos, std::move(candidate));
    return true;
}

} // namespace riskfront
