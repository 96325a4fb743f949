#include "riskfront/kernels.hpp"

#include <cmath>
#include <limits>

namespace riskfront::kernels::scalar {

void evaluate_batch(const EvalTables& t, const double* columns, std::size_t rows, double* cost, double* risk,
                    double* linear_cost)
{
    for (std::size_t r = 0; r < rows; ++r) {
        double acc_cost = 0.0;
        double acc_risk = 0.0;
        double acc_linear = 0.0;
        for (std::size_t i = 0; i < t.suppliers; ++i) {
            const double x = columns[i * rows + r];
            acc_cost += t.cost_weight[i] * x;
            acc_linear += t.unit_cost[i] * x;

            const double share = x / t.demand;
            const double* th = &t.thresholds[i * t.steps];
            double alpha = t.alphas[i * t.steps];
            double beta = t.betas[i * t.steps];
            for (std::size_t k = 1; k < t.steps; ++k) {
                if (th[k] <= share) {
                    alpha = t.alphas[i * t.steps + k];
                    beta = t.betas[i * t.steps + k];
                }
            }
            acc_risk += alpha * beta * share;
        }
        cost[r] = t.period * acc_cost;
        risk[r] = acc_risk;
        linear_cost[r] = acc_linear;
    }
}

void nearest_distances(const double* ax, const double* ay, std::size_t na, const double* bx, const double* by,
                       std::size_t nb, double* out)
{
    for (std::size_t k = 0; k < na; ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nb; ++j) {
            const double dx = ax[k] - bx[j];
            const double dy = ay[k] - by[j];
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) best = d2;
        }
        out[k] = std::sqrt(best);
    }
}

} // namespace riskfront::kernels::scalar
