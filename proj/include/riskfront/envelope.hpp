#pragma once

#include "riskfront/model.hpp"
#include "riskfront/pareto.hpp"

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace riskfront {

struct TimePoint {
    double t = 0.0;
    double value = 0.0;

    friend bool operator==(const TimePoint&, const TimePoint&) = default;
};

/// Time-stamped values with strictly increasing, finite times.
class TimeSeries {
public:
    TimeSeries() = default;
    // Throws InputError if times are not strictly increasing.
    explicit TimeSeries(std::vector<TimePoint> points);

    std::span<const TimePoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    double front_time() const { return points_.front().t; }
    double back_time() const { return points_.back().t; }

    // Linear interpolation; throws ExtrapolationError outside [front_time, back_time].
    double at(double t) const;

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<TimePoint> points_;
};

struct Envelope {
    TimeSeries lower;
    TimeSeries upper;
};

enum class Interpolation { linear };

// Cost bounds at one sweep demand.
struct EnvelopeKnot {
    double demand = 0.0;
    double min_cost = 0.0;
    double max_cost = 0.0;
};

std::vector<EnvelopeKnot> knots_from_sweep(const SweepResult& sweep);

/// Reads (time, value) pairs from the named columns of a CSV file with a
/// header. Every unparseable row is reported by line number; a non-increasing
/// time column is reported at the first offending line.
TimeSeries load_series(const std::filesystem::path& path, std::string_view time_column,
                       std::string_view value_column);

// CSV with the given header names; values use shortest round-trip text.
std::string series_csv(const TimeSeries& series, std::string_view time_name, std::string_view value_name);

/// Maps each demand of the series to [min cost, max cost] by interpolating
/// between the two neighbouring knots. Demands outside the knot hull throw
/// ExtrapolationError.
Envelope build_envelope(const TimeSeries& demand_series, std::span<const EnvelopeKnot> knots,
                        Interpolation scheme = Interpolation::linear);
Envelope build_envelope(const TimeSeries& demand_series, const SweepResult& sweep,
                        Interpolation scheme = Interpolation::linear);

std::string envelope_csv(const Envelope& env);

struct Containment {
    std::size_t points = 0;
    std::size_t inside = 0;
    double ratio = 0.0;
};

// Closed-interval containment with the envelope interpolated in time.
Containment containment(const TimeSeries& series, const Envelope& env);
double containment_ratio(const TimeSeries& series, const Envelope& env);

} // namespace riskfront
