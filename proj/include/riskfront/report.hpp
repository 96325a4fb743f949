#pragma once

// Text layouts of every CSV artifact the command-line tool writes.

#include "riskfront/envelope.hpp"
#include "riskfront/front.hpp"
#include "riskfront/ga.hpp"
#include "riskfront/oracle.hpp"
#include "riskfront/pareto.hpp"

#include <span>
#include <string>

namespace riskfront::report {

// x1,...,xn,total_cost,risk_index,feasible
std::string enumeration_header(std::size_t suppliers);
std::string enumeration_row(std::span<const Units> shares, const ObjectivePoint& point, bool feasible);

// generation,spawned,children,mutations,eliminated,surviving,best_fitness
std::string stats_csv(std::span<const GenerationStats> history);

// demand,x1..xn,total_cost,risk_index,source
std::string front_header(std::size_t suppliers);
std::string front_rows(Units demand, std::span<const FrontPoint> front);

// demand,min_fc,max_fc,min_ri
std::string triple_header();
std::string triple_row(Units demand, const ParetoResult& result);

// generation,pareto_distance
std::string indicators_csv(std::span<const double> indicators);

// demand,method,solutions,runtime_ms
std::string compare_header();
std::string compare_row(Units demand, std::string_view method, std::uint64_t solutions, double runtime_ms);

} // namespace riskfront::report
