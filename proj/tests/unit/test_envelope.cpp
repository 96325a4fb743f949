#include "doctest.h"
#include "support.hpp"

#include "riskfront/errors.hpp"
#include "riskfront/envelope.hpp"
#include "riskfront/pareto.hpp"
#include "riskfront/rng.hpp"

using namespace riskfront;
using test_support::scratch_dir;
using test_support::spit;

namespace {

const std::vector<EnvelopeKnot> kKnots = {{100, 200, 260}, {240, 480, 700}, {480, 960, 1500}};

TimeSeries series(std::vector<std::pair<double, double>> pts)
{
    std::vector<TimePoint> out;
    for (auto [t, v] : pts) out.push_back({t, v});
    return TimeSeries(std::move(out));
}

} // namespace

TEST_CASE("load_series")
{
    const auto dir = scratch_dir("series");
    spit(dir / "ok.csv", "t,v\n0,1\n1,2\n");
    const auto s = load_series(dir / "ok.csv", "t", "v");
    REQUIRE(s.size() == 2);
    CHECK(s.points()[1] == TimePoint{1, 2});

    spit(dir / "backwards.csv", "t,v\n0,1\n2,2\n1,3\n");
    CHECK_THROWS_WITH_AS(load_series(dir / "backwards.csv", "t", "v"), doctest::Contains("line 4"), InputError);

    spit(dir / "garbage.csv", "t,v\n0,1\nx,2\n2,\n3,4\n");
    CHECK_THROWS_WITH_AS(load_series(dir / "garbage.csv", "t", "v"), doctest::Contains("lines 3, 4"), InputError);

    spit(dir / "empty.csv", "t,v\n");
    CHECK_THROWS_AS(load_series(dir / "empty.csv", "t", "v"), InputError);
    CHECK_THROWS_AS(load_series(dir / "ok.csv", "time", "v"), InputError);
    CHECK_THROWS_AS(load_series(dir / "missing.csv", "t", "v"), InputError);
}

TEST_CASE("the shipped revenue trace loads without rejected rows")
{
    const auto demand = load_series(test_support::fixture("revenue_trace.csv"), "t", "demand");
    const auto value = load_series(test_support::fixture("revenue_trace.csv"), "t", "value");
    CHECK(demand.size() == 96);
    CHECK(value.size() == 96);
}

TEST_CASE("series round trip through csv is exact")
{
    Rng rng(12);
    std::vector<TimePoint> pts;
    double t = 0;
    for (int k = 0; k < 200; ++k) {
        t += 0.001 + static_cast<double>(rng.below(1000)) / 7.0;
        pts.push_back({t, static_cast<double>(rng.next() % 100000) / 3.0});
    }
    const TimeSeries original(pts);
    const auto dir = scratch_dir("roundtrip");
    spit(dir / "s.csv", series_csv(original, "time", "revenue"));
    CHECK(load_series(dir / "s.csv", "time", "revenue") == original);
}

TEST_CASE("build_envelope interpolation")
{
    SUBCASE("demand on a knot gives that knot's triple")
    {
        const auto env = build_envelope(series({{0, 240}, {1, 240}, {2, 240}}), kKnots);
        for (const auto& p : env.lower.points()) CHECK(p.value == 480);
        for (const auto& p : env.upper.points()) CHECK(p.value == 700);
    }
    SUBCASE("midway between knots gives the mean")
    {
        const auto env = build_envelope(series({{0, 170}, {5, 360}}), kKnots);
        CHECK(env.lower.points()[0].value == doctest::Approx((200 + 480) / 2.0));
        CHECK(env.upper.points()[0].value == doctest::Approx((260 + 700) / 2.0));
        CHECK(env.lower.points()[1].value == doctest::Approx((480 + 960) / 2.0));
        CHECK(env.upper.points()[1].value == doctest::Approx((700 + 1500) / 2.0));
    }
    SUBCASE("outside the sweep hull")
    {
        CHECK_THROWS_AS(build_envelope(series({{0, 99.5}}), kKnots), ExtrapolationError);
        CHECK_THROWS_AS(build_envelope(series({{0, 480.01}}), kKnots), ExtrapolationError);
    }
}

TEST_CASE("property: lower never exceeds upper, on and between time knots")
{
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        // Random ordered knots, including some with min == max.
        std::vector<EnvelopeKnot> knots;
        double d = 10;
        for (int k = 0; k < 6; ++k) {
            d += 1 + static_cast<double>(rng.below(100));
            const double lo = static_cast<double>(rng.below(100000)) / 97.0;
            const double hi = rng.coin() ? lo : lo + static_cast<double>(rng.below(1000)) / 13.0;
            knots.push_back({d, lo, hi});
        }
        std::vector<std::pair<double, double>> pts;
        for (int k = 0; k < 40; ++k) {
            const double span = knots.back().demand - knots.front().demand;
            pts.emplace_back(k, knots.front().demand + span * static_cast<double>(rng.below(10001)) / 10000.0);
        }
        const auto env = build_envelope(series(pts), knots);
        for (double t = 0; t <= 39; t += 0.125) {
            CHECK(env.lower.at(t) <= env.upper.at(t));
        }
    }
}

TEST_CASE("containment")
{
    const auto env = build_envelope(series({{0, 100}, {10, 240}, {20, 480}, {30, 300}}), kKnots);

    std::vector<std::pair<double, double>> on_lower, above;
    for (double t = 0; t <= 30; t += 0.5) {
        on_lower.emplace_back(t, env.lower.at(t));
        above.emplace_back(t, env.upper.at(t) + 1.0);
    }
    CHECK(containment_ratio(series(on_lower), env) == 1.0);
    CHECK(containment_ratio(series(above), env) == 0.0);

    const auto half = series({{0, 230}, {10, 1}, {20, 1000}, {30, 99999}});
    const auto c = containment(half, env);
    CHECK(c.points == 4);
    CHECK(c.inside == 2);
    CHECK(c.ratio == 0.5);

    CHECK_THROWS_AS(containment(series({{31, 500}}), env), ExtrapolationError);
}

TEST_CASE("property: widening the envelope never lowers containment")
{
    Rng rng(5);
    const auto narrow = build_envelope(series({{0, 100}, {10, 300}, {20, 480}}), kKnots);
    std::vector<EnvelopeKnot> wide = kKnots;
    for (auto& k : wide) {
        k.min_cost -= 50;
        k.max_cost += 80;
    }
    const auto broad = build_envelope(series({{0, 100}, {10, 300}, {20, 480}}), wide);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<double, double>> pts;
        for (int k = 0; k <= 20; ++k) pts.emplace_back(k, 100 + static_cast<double>(rng.below(1500)));
        const auto s = series(pts);
        CHECK(containment_ratio(s, broad) >= containment_ratio(s, narrow));
    }
}

TEST_CASE("a finer sweep grid does not widen the envelope at knot demands")
{
    GaConfig cfg;
    cfg.seed = 3;
    cfg.max_generations = 20;
    const auto scen = Scenario::fig2(100);
    const std::vector<Units> coarse{100, 300, 500}, fine{100, 200, 300, 400, 500};
    const auto a = sweep(scen, coarse, cfg);
    const auto b = sweep(scen, fine, cfg);
    // Time points sit on the coarse knots, which the fine grid shares.
    const auto trace = series({{0, 100}, {1, 300}, {2, 500}});
    const auto ea = build_envelope(trace, a);
    const auto eb = build_envelope(trace, b);
    for (std::size_t k = 0; k < 3; ++k) {
        const double wa = ea.upper.points()[k].value - ea.lower.points()[k].value;
        const double wb = eb.upper.points()[k].value - eb.lower.points()[k].value;
        CHECK(wb <= wa);
    }
}

TEST_CASE("time series invariants")
{
    CHECK_THROWS_AS(series({{0, 1}, {0, 2}}), InputError);
    const auto s = series({{0, 0}, {2, 4}});
    CHECK(s.at(1) == 2.0);
    CHECK_THROWS_AS(s.at(-0.1), ExtrapolationError);
}
