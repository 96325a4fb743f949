#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace riskfront {

using Units = std::int64_t;

// Consequence-of-failure (alpha) and value-added fraction (beta) of a supplier.
struct StructuralValues {
    double alpha = 0.0;
    double beta = 0.0;

    friend bool operator==(const StructuralValues&, const StructuralValues&) = default;
};

struct Breakpoint {
    double threshold = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Step function from workload share to (alpha, beta).
///
/// Breakpoints are sorted by strictly increasing threshold; the first one sits
/// at share 0 and alpha/beta never decrease along the table. Lookup picks the
/// last breakpoint whose threshold does not exceed the share.
class StructuralProfile {
public:
    StructuralProfile() = default;
    explicit StructuralProfile(std::vector<Breakpoint> breakpoints);

    // Built-in table fitted to the published workload analysis.
    static StructuralProfile standard();
    static StructuralProfile constant(double alpha, double beta);

    std::span<const Breakpoint> breakpoints() const noexcept { return breakpoints_; }
    bool empty() const noexcept { return breakpoints_.empty(); }

    // Throws ConfigError when the table is empty, unsorted, or out of [0,1].
    void validate() const;

    friend bool operator==(const StructuralProfile&, const StructuralProfile&) = default;

private:
    std::vector<Breakpoint> breakpoints_;
};

struct SupplierSpec {
    double unit_cost = 1.0;
    StructuralProfile profile = StructuralProfile::standard();
};

struct Weights {
    double cost = 0.5;
    double risk = 0.5;
};

/// One supply chain instance: n suppliers feeding a single manufacturer.
struct Scenario {
    std::vector<SupplierSpec> suppliers;
    Units demand = 1;
    double retailer_coefficient = 4.0;
    double period_of_interest = 1.0;
    // One entry per supplier.
    std::vector<double> mean_demand_rate;
    Weights weights;

    std::size_t supplier_count() const noexcept { return suppliers.size(); }
    double max_unit_cost() const;

    // Same instance with a different demand.
    Scenario with_demand(Units demand) const;

    // Throws ConfigError on any broken invariant.
    void validate() const;

    // Costs (2, 3, 7), retailer coefficient 4, standard profiles.
    static Scenario fig2(Units demand = 100);
    static Scenario with_costs(std::initializer_list<double> costs, Units demand,
                               double retailer_coefficient = 4.0);
};

/// Integer workload assignment across suppliers.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<Units> shares) : shares_(std::move(shares)) {}
    Distribution(std::initializer_list<Units> shares) : shares_(shares) {}

    std::span<const Units> shares() const noexcept { return shares_; }
    std::size_t size() const noexcept { return shares_.size(); }
    Units operator[](std::size_t i) const { return shares_[i]; }
    Units total() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const Distribution&, const Distribution&) = default;
    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<Units> shares_;
};

struct ObjectivePoint {
    double total_cost = 0.0;
    double risk_index = 0.0;

    friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

// Throws InputError when the distribution has the wrong number of suppliers.
void check_dimension(const Distribution& dist, const Scenario& scen);

// Throws InputError if the distribution does not belong to the scenario:
// wrong dimension, negative or oversized shares, or a sum other than demand.
void check_distribution(const Distribution& dist, const Scenario& scen);

} // namespace riskfront
