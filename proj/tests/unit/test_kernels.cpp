#include "doctest.h"

#include "riskfront/errors.hpp"
#include "riskfront/evaluator.hpp"
#include "riskfront/kernels.hpp"
#include "riskfront/objectives.hpp"
#include "riskfront/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

using namespace riskfront;
using kernels::Isa;

namespace {

bool same_bits(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

// Random compositions in column-major layout.
std::vector<double> random_columns(std::size_t suppliers, std::size_t rows, Units d, Rng& rng)
{
    std::vector<double> cols(suppliers * rows);
    for (std::size_t r = 0; r < rows; ++r) {
        Units left = d;
        for (std::size_t i = 0; i + 1 < suppliers; ++i) {
            const auto x = static_cast<Units>(rng.below(static_cast<std::uint64_t>(left) + 1));
            cols[i * rows + r] = static_cast<double>(x);
            left -= x;
        }
        cols[(suppliers - 1) * rows + r] = static_cast<double>(left);
    }
    return cols;
}

Scenario mixed_profile_scenario(Units d)
{
    auto scen = Scenario::with_costs({2.0, 3.5, 7.0, 1.25}, d, 5.0);
    scen.suppliers[1].profile = StructuralProfile::constant(0.3, 0.7);
    scen.suppliers[3].profile = StructuralProfile({{0.0, 0.05, 0.2}, {0.33, 0.6, 0.9}});
    scen.mean_demand_rate = {1.0, 0.9, 1.1, 1.3};
    scen.period_of_interest = 2.5;
    return scen;
}

} // namespace

TEST_CASE("every available kernel variant matches the scalar reference bit for bit")
{
    for (const auto& scen : {Scenario::fig2(100), Scenario::fig2(7), mixed_profile_scenario(997)}) {
        const auto tables = kernels::EvalTables::from(scen);
        Rng rng(42);
        for (std::size_t rows : {1u, 3u, 4u, 5u, 17u, 256u, 1001u}) {
            const auto cols = random_columns(scen.supplier_count(), rows, scen.demand, rng);
            std::vector<double> ref(3 * rows), got(3 * rows);
            kernels::evaluate_batch(Isa::scalar, tables, cols, rows,
                                    {{ref.data(), rows}, {ref.data() + rows, rows}, {ref.data() + 2 * rows, rows}});
            for (Isa isa : kernels::available_isas()) {
                CAPTURE(kernels::to_string(isa));
                CAPTURE(rows);
                kernels::evaluate_batch(isa, tables, cols, rows,
                                        {{got.data(), rows}, {got.data() + rows, rows}, {got.data() + 2 * rows, rows}});
                for (std::size_t k = 0; k < 3 * rows; ++k) {
                    REQUIRE(same_bits(ref[k], got[k]));
                }
            }
        }
    }
}

TEST_CASE("batch kernel agrees with the single-point objective functions")
{
    const auto scen = mixed_profile_scenario(250);
    const BatchEvaluator evaluator(scen);
    Rng rng(3);
    std::vector<Distribution> dists;
    for (int k = 0; k < 300; ++k) {
        std::vector<Units> x(4);
        Units left = 250;
        for (int i = 0; i < 3; ++i) {
            x[i] = static_cast<Units>(rng.below(static_cast<std::uint64_t>(left) + 1));
            left -= x[i];
        }
        x[3] = left;
        dists.emplace_back(std::move(x));
    }
    for (Isa isa : kernels::available_isas()) {
        kernels::set_isa_override(isa);
        const auto evals = evaluator.evaluate(dists);
        for (std::size_t k = 0; k < dists.size(); ++k) {
            CHECK(same_bits(evals[k].point.total_cost, total_cost(dists[k], scen)));
            CHECK(same_bits(evals[k].point.risk_index, risk_index(dists[k], scen)));
            CHECK(evals[k].within_ceiling == is_feasible(dists[k], scen, false));
        }
    }
    kernels::set_isa_override(std::nullopt);
}

TEST_CASE("nearest distance kernels agree")
{
    Rng rng(11);
    auto uniform = [&] { return static_cast<double>(rng.below(1u << 20)) / (1u << 20); };
    for (std::size_t na : {1u, 6u, 33u}) {
        for (std::size_t nb : {1u, 2u, 4u, 7u, 64u, 101u}) {
            std::vector<double> ax(na), ay(na), bx(nb), by(nb);
            for (auto* v : {&ax, &ay, &bx, &by}) {
                for (auto& e : *v) e = uniform();
            }
            std::vector<double> ref(na), got(na);
            kernels::nearest_distances(Isa::scalar, ax, ay, bx, by, ref);
            for (std::size_t k = 0; k < na; ++k) {
                double best = 1e300;
                for (std::size_t j = 0; j < nb; ++j) {
                    best = std::min(best, std::hypot(ax[k] - bx[j], ay[k] - by[j]));
                }
                CHECK(ref[k] == doctest::Approx(best).epsilon(1e-14));
            }
            for (Isa isa : kernels::available_isas()) {
                kernels::nearest_distances(isa, ax, ay, bx, by, got);
                for (std::size_t k = 0; k < na; ++k) {
                    CHECK(same_bits(ref[k], got[k]));
                }
            }
        }
    }
}

TEST_CASE("kernel argument checks")
{
    const auto tables = kernels::EvalTables::from(Scenario::fig2(10));
    std::vector<double> cols(3), out(1);
    CHECK_THROWS_AS(kernels::evaluate_batch(Isa::scalar, tables, cols, 2, {out, out, out}), InputError);
    std::vector<double> a{0.0}, empty;
    CHECK_THROWS_AS(kernels::nearest_distances(Isa::scalar, a, a, empty, empty, out), InputError);
}

TEST_CASE("isa selection")
{
    CHECK(kernels::available_isas().front() == Isa::scalar);
    kernels::set_isa_override(Isa::scalar);
    CHECK(kernels::active_isa() == Isa::scalar);
    kernels::set_isa_override(std::nullopt);
    if (!std::getenv("RISKFRONT_SIMD")) {
        CHECK(kernels::active_isa() == kernels::detected_isa());
    }
}
