#pragma once

#include "riskfront/kernels.hpp"
#include "riskfront/model.hpp"

#include <span>
#include <vector>

namespace riskfront {

struct Evaluation {
    ObjectivePoint point;
    // sum_i c_i x_i <= retailer_coefficient * d
    bool within_ceiling = false;
};

/// Evaluates many distributions of one scenario through the batch kernels.
/// Inputs are assumed to satisfy the sum and bound invariants.
class BatchEvaluator {
public:
    explicit BatchEvaluator(const Scenario& scen);

    std::vector<Evaluation> evaluate(std::span<const Distribution> dists) const;
    Evaluation evaluate(const Distribution& dist) const;

    const kernels::EvalTables& tables() const noexcept { return tables_; }

private:
    kernels::EvalTables tables_;
    double ceiling_;
};

} // namespace riskfront
