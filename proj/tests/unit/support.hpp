#pragma once

// Helpers shared by the unit suites. The reference_* functions are written
// independently of the library (plain loops, no shared code) so they can act
// as oracles.

#include "riskfront/model.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace test_support {

inline std::filesystem::path fixture(const std::string& name)
{
    return std::filesystem::path(RISKFRONT_FIXTURES) / name;
}

/// Fresh, empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag)
{
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("riskfront_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

// Default step profile, restated by hand.
struct RefStep {
    double threshold, alpha, beta;
};
inline const std::vector<RefStep>& reference_profile()
{
    static const std::vector<RefStep> steps = {{0.0, 0.1, 0.1},  {0.15, 0.1, 0.2}, {0.2, 0.2, 0.3},
                                               {0.3, 0.3, 0.4},  {0.4, 0.4, 0.4},  {0.45, 0.5, 0.5},
                                               {0.5, 0.8, 0.6},  {0.6, 1.0, 0.8},  {0.75, 1.0, 1.0}};
    return steps;
}

struct RefPoint {
    double cost;
    double risk;
    bool feasible;
};

/// Cost and risk of (a, b, c) under costs `c`, coefficient 4, default profile.
inline RefPoint reference_point(long a, long b, long c, const double (&cost)[3], long d, double coeff = 4.0)
{
    const long x[3] = {a, b, c};
    RefPoint p{0.0, 0.0, true};
    for (int i = 0; i < 3; ++i) {
        p.cost += cost[i] * static_cast<double>(x[i]);
        const double share = static_cast<double>(x[i]) / static_cast<double>(d);
        double al = 0, be = 0;
        for (const auto& s : reference_profile()) {
            if (share >= s.threshold) {
                al = s.alpha;
                be = s.beta;
            }
        }
        p.risk += al * be * share;
    }
    p.feasible = p.cost <= coeff * static_cast<double>(d);
    return p;
}

inline bool reference_dominates(const RefPoint& a, const RefPoint& b)
{
    return a.cost <= b.cost && a.risk <= b.risk && (a.cost < b.cost || a.risk < b.risk);
}

/// All (a,b,c) with a+b+c = d, by nested loops.
inline std::vector<std::vector<long>> reference_compositions(long d)
{
    std::vector<std::vector<long>> out;
    for (long a = 0; a <= d; ++a) {
        for (long b = 0; a + b <= d; ++b) {
            out.push_back({a, b, d - a - b});
        }
    }
    return out;
}

} // namespace test_support
