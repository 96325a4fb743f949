#include "riskfront/report.hpp"
#include "riskfront/csv.hpp"

namespace riskfront::report {

namespace {

std::string share_columns(std::size_t n)
{
    std::string s;
    for (std::size_t i = 1; i <= n; ++i) {
        s += "x" + std::to_string(i) + ",";
    }
    return s;
}

std::string share_values(std::span<const Units> shares)
{
    std::string s;
    for (auto x : shares) {
        s += std::to_string(x) + ",";
    }
    return s;
}

} // namespace

std::string enumeration_header(std::size_t suppliers)
{
    return share_columns(suppliers) + "total_cost,risk_index,feasible\n";
}

std::string enumeration_row(std::span<const Units> shares, const ObjectivePoint& point, bool feasible)
{
    return share_values(shares) + csv::format(point.total_cost) + "," + csv::format(point.risk_index) + "," +
           (feasible ? "1" : "0") + "\n";
}

std::string stats_csv(std::span<const GenerationStats> history)
{
    std::string out = "generation,spawned,children,mutations,eliminated,surviving,best_fitness\n";
    for (const auto& s : history) {
        out += std::to_string(s.generation) + "," + std::to_string(s.spawned) + "," + std::to_string(s.children) +
               "," + std::to_string(s.mutations) + "," + std::to_string(s.eliminated) + "," +
               std::to_string(s.surviving) + "," + csv::format(s.best_fitness) + "\n";
    }
    return out;
}

std::string front_header(std::size_t suppliers)
{
    return "demand," + share_columns(suppliers) + "total_cost,risk_index,source\n";
}

std::string front_rows(Units demand, std::span<const FrontPoint> front)
{
    std::string out;
    for (const auto& f : front) {
        out += std::to_string(demand) + "," + share_values(f.distribution.shares()) +
               csv::format(f.point.total_cost) + "," + csv::format(f.point.risk_index) + "," +
               to_string(f.origin) + "\n";
    }
    return out;
}

std::string triple_header()
{
    return "demand,min_fc,max_fc,min_ri\n";
}

std::string triple_row(Units demand, const ParetoResult& r)
{
    return std::to_string(demand) + "," + csv::format(r.min_cost) + "," + csv::format(r.max_cost) + "," +
           csv::format(r.min_risk) + "\n";
}

std::string indicators_csv(std::span<const double> indicators)
{
    std::string out = "generation,pareto_distance\n";
    for (std::size_t g = 0; g < indicators.size(); ++g) {
        out += std::to_string(g + 2) + "," + csv::format(indicators[g]) + "\n";
    }
    return out;
}

std::string compare_header()
{
    return "demand,method,solutions,runtime_ms\n";
}

std::string compare_row(Units demand, std::string_view method, std::uint64_t solutions, double runtime_ms)
{
    return std::to_string(demand) + "," + std::string(method) + "," + std::to_string(solutions) + "," +
           csv::format(runtime_ms) + "\n";
}

} // namespace riskfront::report
