#include "doctest.h"
#include "support.hpp"

#include "riskfront/csv.hpp"
#include "riskfront/errors.hpp"
#include "riskfront/objectives.hpp"
#include "riskfront/rng.hpp"
#include "riskfront/scenario_io.hpp"

#include "json.hpp"

#include <map>

using namespace riskfront;
using test_support::fixture;

namespace {

struct Table1Row {
    Distribution dist;
    std::vector<StructuralValues> sv;
    double printed_cost;
    double printed_risk;
};

std::vector<Table1Row> table1()
{
    const auto t = csv::read(fixture("table1.csv"));
    std::vector<Table1Row> rows;
    for (const auto& r : t.rows) {
        auto num = [&](const char* name) {
            double v = 0;
            REQUIRE(csv::parse(r[t.column(name)], v));
            return v;
        };
        Table1Row row;
        row.dist = Distribution{static_cast<Units>(num("x1")), static_cast<Units>(num("x2")),
                                static_cast<Units>(num("x3"))};
        for (int i = 1; i <= 3; ++i) {
            const auto k = std::to_string(i);
            row.sv.push_back({num(("alpha" + k).c_str()), num(("beta" + k).c_str())});
        }
        row.printed_cost = num("printed_cost");
        row.printed_risk = num("printed_risk");
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("table 1 total cost column is reproduced exactly")
{
    const auto scen = Scenario::fig2(100);
    const auto rows = table1();
    REQUIRE(rows.size() == 11);
    for (const auto& row : rows) {
        CAPTURE(row.dist.to_string());
        CHECK(total_cost(row.dist, scen) == row.printed_cost);
    }
}

TEST_CASE("table 1 risk index with printed structural values")
{
    // Rows whose printed risk is not sum(alpha*beta*P) of the printed columns
    // are checked against the formula value instead.
    const std::map<std::string, double> formula_only = {
        {"[8,27,65]", 0.5289}, {"[28,32,40]", 0.1424}, {"[50,25,25]", 0.12}, {"[70,20,10]", 0.349}};
    int consistent = 0;
    for (const auto& row : table1()) {
        const auto key = row.dist.to_string();
        CAPTURE(key);
        const double ri = risk_index(row.dist, 100, row.sv);
        if (auto it = formula_only.find(key); it != formula_only.end()) {
            CHECK(ri == doctest::Approx(it->second).epsilon(1e-12));
            CHECK(std::abs(ri - row.printed_risk) > 1e-3);
        } else {
            CHECK(std::abs(ri - row.printed_risk) <= 1e-9);
            ++consistent;
        }
    }
    CHECK(consistent == 7);
}

TEST_CASE("default profile risk index")
{
    const auto scen = Scenario::fig2(100);
    CHECK(risk_index(Distribution{50, 25, 25}, scen) == doctest::Approx(0.27).epsilon(1e-12));
    CHECK(risk_index(Distribution{0, 25, 75}, scen) == doctest::Approx(0.765).epsilon(1e-12));
    CHECK(risk_index(Distribution{100, 0, 0}, scen) == doctest::Approx(1.0));
}

TEST_CASE("structural step lookup takes the last threshold not above the share")
{
    const auto p = StructuralProfile::standard();
    CHECK(structural_values(p, 0.0) == StructuralValues{0.1, 0.1});
    CHECK(structural_values(p, 0.1999) == StructuralValues{0.1, 0.2});
    CHECK(structural_values(p, 0.2) == StructuralValues{0.2, 0.3});
    CHECK(structural_values(p, 0.75) == StructuralValues{1.0, 1.0});
    CHECK(structural_values(p, 1.0) == StructuralValues{1.0, 1.0});
}

TEST_CASE("fitness of table 1 rows under both weightings")
{
    auto scen = Scenario::fig2(100);
    CHECK(fitness(Distribution{70, 20, 10}, scen) == doctest::Approx(0.7116428571).epsilon(1e-9));
    CHECK(fitness(Distribution{50, 25, 25}, scen) == doctest::Approx(0.705).epsilon(1e-12));
    scen.weights = {1.0, 0.0};
    CHECK(fitness(Distribution{100, 0, 0}, scen) == doctest::Approx(1.0 - 200.0 / 700.0));
}

TEST_CASE("feasibility honours the retailer cost ceiling")
{
    const auto scen = Scenario::fig2(100);
    CHECK_FALSE(is_feasible(Distribution{0, 25, 75}, scen, false));
    CHECK(is_feasible(Distribution{0, 25, 75}, scen, true));
    CHECK(is_feasible(Distribution{50, 25, 25}, scen, false));
    CHECK_FALSE(is_feasible(Distribution{50, 25, 24}, scen, true));
    CHECK(is_feasible(Distribution{0, 75, 25}, scen, false)); // cost exactly 400
    CHECK_FALSE(is_feasible(Distribution{0, 74, 26}, scen, false));
}

TEST_CASE("invalid distributions are rejected")
{
    const auto scen = Scenario::fig2(100);
    CHECK_THROWS_AS(total_cost(Distribution{50, 50}, scen), InputError);
    CHECK_THROWS_AS(risk_index(Distribution{50, 25, 24}, scen), InputError);
    CHECK_THROWS_AS(risk_index(Distribution{-1, 51, 50}, scen), InputError);
    CHECK_THROWS_WITH_AS(check_distribution(Distribution{10, 10, 10}, scen), doctest::Contains("sums to 30"),
                         InputError);
}

TEST_CASE("scenario validation")
{
    auto scen = Scenario::fig2(100);
    CHECK_NOTHROW(scen.validate());
    auto bad = scen;
    bad.demand = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = scen;
    bad.weights = {-0.1, 1.1};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = scen;
    bad.suppliers.resize(1);
    bad.mean_demand_rate.resize(1);
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    CHECK_THROWS_AS(StructuralProfile({{0.3, 0.1, 0.1}, {0.2, 0.2, 0.2}}).validate(), ConfigError);
}

TEST_CASE("scenario json round trip and strict keys")
{
    const auto loaded = load_scenario(fixture("fig2.json"));
    const auto builtin = Scenario::fig2(100);
    CHECK(scenario_to_json(loaded) == scenario_to_json(builtin));
    CHECK(scenario_to_json(scenario_from_json(scenario_to_json(builtin))) == scenario_to_json(builtin));

    auto doc = scenario_to_json(builtin);
    doc["lead_time"] = 3;
    CHECK_THROWS_WITH_AS(scenario_from_json(doc), doctest::Contains("lead_time"), ConfigError);
    doc = scenario_to_json(builtin);
    doc["suppliers"][1]["capacity"] = 10;
    CHECK_THROWS_WITH_AS(scenario_from_json(doc), doctest::Contains("suppliers[1]"), ConfigError);
    doc = scenario_to_json(builtin);
    doc["weights"] = {1.0};
    CHECK_THROWS_AS(scenario_from_json(doc), ConfigError);
}

TEST_CASE("property: objective bounds on random distributions")
{
    Rng rng(7);
    for (Units d : {1, 7, 100, 999}) {
        const auto scen = Scenario::fig2(d);
        for (int k = 0; k < 500; ++k) {
            const auto a = static_cast<Units>(rng.below(static_cast<std::uint64_t>(d) + 1));
            const auto b = static_cast<Units>(rng.below(static_cast<std::uint64_t>(d - a) + 1));
            const Distribution x{a, b, d - a - b};
            const auto p = objective_point(x, scen);
            CHECK(p.total_cost >= 2.0 * static_cast<double>(d));
            CHECK(p.total_cost <= 7.0 * static_cast<double>(d));
            CHECK(p.risk_index >= 0.0);
            CHECK(p.risk_index <= 1.0 + 1e-12);
            const auto probs = marginal_failure_probabilities(x, scen);
            CHECK(probs[0] + probs[1] + probs[2] == doctest::Approx(1.0));
            const double f = fitness(x, scen);
            CHECK(f >= 1.0 - (0.5 + 0.5 / 3.0) - 1e-12);
            CHECK(f <= 1.0);
        }
    }
}

TEST_CASE("property: library objectives agree with the hand-written reference")
{
    const double cost[3] = {2, 3, 7};
    const auto scen = Scenario::fig2(30);
    for (const auto& c : test_support::reference_compositions(30)) {
        const auto ref = test_support::reference_point(c[0], c[1], c[2], cost, 30);
        const Distribution x{c[0], c[1], c[2]};
        CHECK(total_cost(x, scen) == ref.cost);
        CHECK(risk_index(x, scen) == doctest::Approx(ref.risk).epsilon(1e-12));
        CHECK(is_feasible(x, scen, false) == ref.feasible);
    }
}

TEST_CASE("objective names")
{
    CHECK(parse_objective("cost") == Objective::cost);
    CHECK(parse_objective("risk") == Objective::risk);
    CHECK(parse_objective("weighted") == Objective::weighted);
    CHECK_THROWS_AS(parse_objective("speed"), ConfigError);
}

TEST_CASE("csv number formatting round trips")
{
    for (double v : {0.0, 0.1, 0.7575, 1.0 / 3.0, 1e-17, 123456789.125}) {
        double back = -1;
        REQUIRE(csv::parse(csv::format(v), back));
        CHECK(back == v);
    }
    long long i = 0;
    CHECK_FALSE(csv::parse("1.5", i));
    CHECK_FALSE(csv::parse("", i));
    double d = 0;
    CHECK_FALSE(csv::parse("abc", d));
}
