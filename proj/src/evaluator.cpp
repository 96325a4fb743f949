#include "riskfront/evaluator.hpp"
#include "riskfront/errors.hpp"

namespace riskfront {

BatchEvaluator::BatchEvaluator(const Scenario& scen)
    : tables_(kernels::EvalTables::from(scen)),
      ceiling_(scen.retailer_coefficient * static_cast<double>(scen.demand))
{
}

std::vector<Evaluation> BatchEvaluator::evaluate(std::span<const Distribution> dists) const
{
    const std::size_t rows = dists.size();
    const std::size_t n = tables_.suppliers;
    std::vector<double> columns(n * rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (dists[r].size() != n) {
            throw InputError("distribution " + dists[r].to_string() + " does not match the supplier count");
        }
        for (std::size_t i = 0; i < n; ++i) {
            columns[i * rows + r] = static_cast<double>(dists[r][i]);
        }
    }
    std::vector<double> cost(rows), risk(rows), linear(rows);
    kernels::evaluate_batch(tables_, columns, rows, {cost, risk, linear});

    std::vector<Evaluation> out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        out[r] = {{cost[r], risk[r]}, linear[r] <= ceiling_};
    }
    return out;
}

Evaluation BatchEvaluator::evaluate(const Distribution& dist) const
{
    return evaluate(std::span<const Distribution>(&dist, 1)).front();
}

} // namespace riskfront
