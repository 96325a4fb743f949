#include "riskfront/envelope.hpp"
#include "riskfront/csv.hpp"
#include "riskfront/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace riskfront {

namespace {

// Convex combination; rounding is monotone, so a <= b pointwise stays ordered.
double lerp(double a, double b, double f)
{
    return a * (1.0 - f) + b * f;
}

std::string num(double v)
{
    return csv::format(v);
}

} // namespace

TimeSeries::TimeSeries(std::vector<TimePoint> points) : points_(std::move(points))
{
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (!std::isfinite(points_[k].t) || !std::isfinite(points_[k].value)) {
            throw InputError("time series point " + std::to_string(k) + " is not finite");
        }
        if (k > 0 && points_[k].t <= points_[k - 1].t) {
            throw InputError("time series is not strictly increasing at point " + std::to_string(k));
        }
    }
}

double TimeSeries::at(double t) const
{
    if (points_.empty() || t < points_.front().t || t > points_.back().t) {
        throw ExtrapolationError("time " + num(t) + " lies outside the series range");
    }
    auto hi = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const TimePoint& p, double x) { return p.t < x; });
    if (hi->t == t) {
        return hi->value;
    }
    auto lo = std::prev(hi);
    return lerp(lo->value, hi->value, (t - lo->t) / (hi->t - lo->t));
}

std::vector<EnvelopeKnot> knots_from_sweep(const SweepResult& sweep)
{
    std::vector<EnvelopeKnot> knots;
    for (const auto& e : sweep.entries) {
        knots.push_back({static_cast<double>(e.demand), e.run.result.min_cost, e.run.result.max_cost});
    }
    return knots;
}

TimeSeries load_series(const std::filesystem::path& path, std::string_view time_column,
                       std::string_view value_column)
{
    const auto table = csv::read(path);
    const auto tc = table.column(time_column);
    const auto vc = table.column(value_column);
    if (table.rows.empty()) {
        throw InputError(path.string() + ": no data rows");
    }
    std::vector<TimePoint> points;
    std::vector<std::size_t> bad;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        TimePoint p;
        if (!csv::parse(table.rows[r][tc], p.t) || !csv::parse(table.rows[r][vc], p.value)) {
            bad.push_back(table.line[r]);
            continue;
        }
        points.push_back(p);
    }
    if (!bad.empty()) {
        std::string msg = path.string() + ": unparseable numbers on line";
        msg += bad.size() > 1 ? "s " : " ";
        for (std::size_t k = 0; k < bad.size(); ++k) {
            if (k) msg += ", ";
            msg += std::to_string(bad[k]);
        }
        throw InputError(msg);
    }
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (points[k].t <= points[k - 1].t) {
            throw InputError(path.string() + ": time column '" + std::string(time_column) +
                             "' is not strictly increasing at line " + std::to_string(table.line[k]));
        }
    }
    return TimeSeries(std::move(points));
}

std::string series_csv(const TimeSeries& series, std::string_view time_name, std::string_view value_name)
{
    std::string out;
    out.append(time_name).append(",").append(value_name).append("\n");
    for (const auto& p : series.points()) {
        out += num(p.t) + "," + num(p.value) + "\n";
    }
    return out;
}

Envelope build_envelope(const TimeSeries& demand_series, std::span<const EnvelopeKnot> knots, Interpolation)
{
    if (knots.empty()) {
        throw ConfigError("envelope needs at least one sweep knot");
    }
    for (std::size_t k = 1; k < knots.size(); ++k) {
        if (knots[k].demand <= knots[k - 1].demand) {
            throw ConfigError("envelope knots must have strictly increasing demand");
        }
    }
    std::vector<TimePoint> lower, upper;
    for (const auto& p : demand_series.points()) {
        const double d = p.value;
        if (d < knots.front().demand || d > knots.back().demand) {
            throw ExtrapolationError("demand " + num(d) + " at t=" + num(p.t) + " is outside the sweep range [" +
                                     num(knots.front().demand) + ", " + num(knots.back().demand) + "]");
        }
        auto hi = std::lower_bound(knots.begin(), knots.end(), d,
                                   [](const EnvelopeKnot& k, double x) { return k.demand < x; });
        double lo_v, hi_v;
        if (hi->demand == d) {
            lo_v = hi->min_cost;
            hi_v = hi->max_cost;
        } else {
            auto lo = std::prev(hi);
            const double f = (d - lo->demand) / (hi->demand - lo->demand);
            lo_v = lerp(lo->min_cost, hi->min_cost, f);
            hi_v = lerp(lo->max_cost, hi->max_cost, f);
        }
        lower.push_back({p.t, lo_v});
        upper.push_back({p.t, hi_v});
    }
    return {TimeSeries(std::move(lower)), TimeSeries(std::move(upper))};
}

Envelope build_envelope(const TimeSeries& demand_series, const SweepResult& sweep, Interpolation scheme)
{
    const auto knots = knots_from_sweep(sweep);
    return build_envelope(demand_series, knots, scheme);
}

std::string envelope_csv(const Envelope& env)
{
    std::string out = "t,lower,upper\n";
    const auto lo = env.lower.points();
    const auto hi = env.upper.points();
    for (std::size_t k = 0; k < lo.size(); ++k) {
        out += num(lo[k].t) + "," + num(lo[k].value) + "," + num(hi[k].value) + "\n";
    }
    return out;
}

Containment containment(const TimeSeries& series, const Envelope& env)
{
    if (env.lower.size() != env.upper.size()) {
        throw InputError("envelope bounds are on different time grids");
    }
    Containment c;
    for (const auto& p : series.points()) {
        const double lo = env.lower.at(p.t);
        const double hi = env.upper.at(p.t);
        ++c.points;
        if (lo <= p.value && p.value <= hi) {
            ++c.inside;
        }
    }
    c.ratio = c.points == 0 ? 0.0 : static_cast<double>(c.inside) / static_cast<double>(c.points);
    return c;
}

double containment_ratio(const TimeSeries& series, const Envelope& env)
{
    return containment(series, env).ratio;
}

} // namespace riskfront
