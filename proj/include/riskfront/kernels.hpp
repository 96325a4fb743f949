#pragma once

// Batch objective evaluation and nearest-point distance kernels.
//
// Every kernel has a scalar reference implementation and, where the target
// allows, an AVX2 variant chosen at runtime. Variants perform the same
// floating point operations in the same order (no FMA contraction), so their
// results are bit-identical to the scalar path and to the single-point
// functions in objectives.hpp.

#include "riskfront/model.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace riskfront::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

// Best variant this CPU and build support.
Isa detected_isa();

// Variant used by the dispatching entry points. RISKFRONT_SIMD=scalar forces
// the reference path; set_isa_override() does the same programmatically.
Isa active_isa();
void set_isa_override(std::optional<Isa> isa);

// Variants compiled into this binary and runnable on this CPU.
std::vector<Isa> available_isas();

/// Scenario data flattened for the kernels.
///
/// Profiles are padded to a common number of steps; padding thresholds are
/// +inf so they never match a share.
struct EvalTables {
    std::size_t suppliers = 0;
    std::size_t steps = 0;
    double period = 1.0;
    double demand = 1.0;
    std::vector<double> unit_cost;   // c_i
    std::vector<double> cost_weight; // mu_i * c_i
    std::vector<double> thresholds;  // suppliers x steps
    std::vector<double> alphas;
    std::vector<double> betas;

    static EvalTables from(const Scenario& scen);
};

/// Shares in structure-of-arrays form: column i holds supplier i's units for
/// every row, column stride == rows.
struct BatchOutput {
    std::span<double> cost;        // xi * sum(mu_i c_i x_i)
    std::span<double> risk;        // sum(alpha_i beta_i x_i / d)
    std::span<double> linear_cost; // sum(c_i x_i), for the cost ceiling
};

void evaluate_batch(const EvalTables& tables, std::span<const double> columns, std::size_t rows,
                    const BatchOutput& out);
void evaluate_batch(Isa isa, const EvalTables& tables, std::span<const double> columns, std::size_t rows,
                    const BatchOutput& out);

/// For every point a_k, the Euclidean distance to its nearest point in b.
/// Points are given as separate x/y arrays; b must be non-empty.
void nearest_distances(std::span<const double> ax, std::span<const double> ay, std::span<const double> bx,
                       std::span<const double> by, std::span<double> out);
void nearest_distances(Isa isa, std::span<const double> ax, std::span<const double> ay,
                       std::span<const double> bx, std::span<const double> by, std::span<double> out);

namespace scalar {
void evaluate_batch(const EvalTables& tables, const double* columns, std::size_t rows, double* cost,
                    double* risk, double* linear_cost);
void nearest_distances(const double* ax, const double* ay, std::size_t na, const double* bx, const double* by,
                       std::size_t nb, double* out);
} // namespace scalar

#if defined(RISKFRONT_HAVE_AVX2)
namespace avx2 {
void evaluate_batch(const EvalTables& tables, const double* columns, std::size_t rows, double* cost,
                    double* risk, double* linear_cost);
void nearest_distances(const double* ax, const double* ay, std::size_t na, const double* bx, const double* by,
                       std::size_t nb, double* out);
} // namespace avx2
#endif

} // namespace riskfront::kernels
