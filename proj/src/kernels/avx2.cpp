// Compiled with -mavx2 only. FMA stays disabled so every lane rounds exactly
// like the scalar reference.

#include "riskfront/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace riskfront::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// Evaluates four rows whose supplier columns start at `columns` with the given stride.
inline void evaluate_block(const EvalTables& t, const double* columns, std::size_t stride, __m256d& cost,
                           __m256d& risk, __m256d& linear)
{
    const __m256d demand = _mm256_set1_pd(t.demand);
    __m256d acc_cost = _mm256_setzero_pd();
    __m256d acc_risk = _mm256_setzero_pd();
    __m256d acc_linear = _mm256_setzero_pd();

    for (std::size_t i = 0; i < t.suppliers; ++i) {
        const __m256d x = _mm256_loadu_pd(columns + i * stride);
        acc_cost = _mm256_add_pd(acc_cost, _mm256_mul_pd(_mm256_set1_pd(t.cost_weight[i]), x));
        acc_linear = _mm256_add_pd(acc_linear, _mm256_mul_pd(_mm256_set1_pd(t.unit_cost[i]), x));

        const __m256d share = _mm256_div_pd(x, demand);
        const std::size_t base = i * t.steps;
        __m256d alpha = _mm256_set1_pd(t.alphas[base]);
        __m256d beta = _mm256_set1_pd(t.betas[base]);
        for (std::size_t k = 1; k < t.steps; ++k) {
            const __m256d hit = _mm256_cmp_pd(_mm256_set1_pd(t.thresholds[base + k]), share, _CMP_LE_OQ);
            alpha = _mm256_blendv_pd(alpha, _mm256_set1_pd(t.alphas[base + k]), hit);
            beta = _mm256_blendv_pd(beta, _mm256_set1_pd(t.betas[base + k]), hit);
        }
        acc_risk = _mm256_add_pd(acc_risk, _mm256_mul_pd(_mm256_mul_pd(alpha, beta), share));
    }
    cost = _mm256_mul_pd(_mm256_set1_pd(t.period), acc_cost);
    risk = acc_risk;
    linear = acc_linear;
}

} // namespace

void evaluate_batch(const EvalTables& t, const double* columns, std::size_t rows, double* cost, double* risk,
                    double* linear_cost)
{
    std::size_t r = 0;
    for (; r + kLanes <= rows; r += kLanes) {
        __m256d c, k, l;
        evaluate_block(t, columns + r, rows, c, k, l);
        _mm256_storeu_pd(cost + r, c);
        _mm256_storeu_pd(risk + r, k);
        _mm256_storeu_pd(linear_cost + r, l);
    }
    if (r == rows) {
        return;
    }

    // Tail: copy the remaining rows into a zero-padded four-wide block.
    const std::size_t tail = rows - r;
    std::vector<double> block(t.suppliers * kLanes, 0.0);
    for (std::size_t i = 0; i < t.suppliers; ++i) {
        std::copy_n(columns + i * rows + r, tail, block.begin() + static_cast<std::ptrdiff_t>(i * kLanes));
    }
    __m256d c, k, l;
    evaluate_block(t, block.data(), kLanes, c, k, l);
    alignas(32) double buf[3][kLanes];
    _mm256_store_pd(buf[0], c);
    _mm256_store_pd(buf[1], k);
    _mm256_store_pd(buf[2], l);
    std::copy_n(buf[0], tail, cost + r);
    std::copy_n(buf[1], tail, risk + r);
    std::copy_n(buf[2], tail, linear_cost + r);
}

void nearest_distances(const double* ax, const double* ay, std::size_t na, const double* bx, const double* by,
                       std::size_t nb, double* out)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t body = nb - nb % kLanes;

    alignas(32) double tail_x[kLanes] = {inf, inf, inf, inf};
    alignas(32) double tail_y[kLanes] = {inf, inf, inf, inf};
    std::copy(bx + body, bx + nb, tail_x);
    std::copy(by + body, by + nb, tail_y);

    for (std::size_t k = 0; k < na; ++k) {
        const __m256d px = _mm256_set1_pd(ax[k]);
        const __m256d py = _mm256_set1_pd(ay[k]);
        __m256d best = _mm256_set1_pd(inf);
        auto step = [&](const double* xs, const double* ys) {
            const __m256d dx = _mm256_sub_pd(px, _mm256_loadu_pd(xs));
            const __m256d dy = _mm256_sub_pd(py, _mm256_loadu_pd(ys));
            best = _mm256_min_pd(best, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
        };
        for (std::size_t j = 0; j < body; j += kLanes) {
            step(bx + j, by + j);
        }
        if (body != nb) {
            step(tail_x, tail_y);
        }
        alignas(32) double lanes[kLanes];
        _mm256_store_pd(lanes, best);
        out[k] = std::sqrt(std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3])));
    }
}

} // namespace riskfront::kernels::avx2
