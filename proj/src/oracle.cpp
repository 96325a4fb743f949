#include "riskfront/oracle.hpp"
#include "riskfront/errors.hpp"
#include "riskfront/kernels.hpp"
#include "riskfront/objectives.hpp"
#include "riskfront/parallel.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

namespace riskfront {

namespace {

constexpr std::size_t kBlockRows = 1024;

struct Range {
    Units first; // inclusive x_1 bounds
    Units last;
};

std::vector<Range> partition_first_share(Units demand, unsigned threads)
{
    const auto values = static_cast<std::size_t>(demand) + 1;
    const std::size_t chunks = threads <= 1 ? 1 : std::min<std::size_t>(values, std::size_t{threads} * 8);
    std::vector<Range> ranges;
    for (std::size_t c = 0; c < chunks; ++c) {
        const auto lo = static_cast<Units>(values * c / chunks);
        const auto hi = static_cast<Units>(values * (c + 1) / chunks) - 1;
        ranges.push_back({lo, hi});
    }
    return ranges;
}

// Visits feasible compositions with x_1 in [range.first, range.last] in
// lexicographic order, evaluating them a block at a time.
template <typename Visit>
std::uint64_t scan_range(const Scenario& scen, const kernels::EvalTables& tables, bool relax, Range range,
                         Visit&& visit)
{
    const std::size_t n = scen.supplier_count();
    const double ceiling = scen.retailer_coefficient * static_cast<double>(scen.demand);

    std::vector<Units> shares(n * kBlockRows);
    std::vector<double> columns(n * kBlockRows);
    std::vector<double> cost(kBlockRows), risk(kBlockRows), linear(kBlockRows);

    std::vector<Units> x(n, 0);
    x[0] = range.first;
    x[n - 1] += scen.demand - range.first;
    bool more = range.first <= range.last;

    std::uint64_t feasible = 0;
    while (more) {
        std::size_t rows = 0;
        while (more && rows < kBlockRows) {
            std::copy(x.begin(), x.end(), shares.begin() + static_cast<std::ptrdiff_t>(rows * n));
            ++rows;
            more = next_composition(x) && x[0] <= range.last;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t i = 0; i < n; ++i) {
                columns[i * rows + r] = static_cast<double>(shares[r * n + i]);
            }
        }
        kernels::evaluate_batch(tables, std::span<const double>(columns.data(), n * rows), rows,
                                {std::span(cost.data(), rows), std::span(risk.data(), rows),
                                 std::span(linear.data(), rows)});
        for (std::size_t r = 0; r < rows; ++r) {
            const Evaluation e{{cost[r], risk[r]}, linear[r] <= ceiling};
            if (relax || e.within_ceiling) {
                ++feasible;
                visit(std::span<const Units>(shares.data() + r * n, n), e);
            }
        }
    }
    return feasible;
}

} // namespace

std::uint64_t composition_count(Units demand, std::size_t suppliers)
{
    if (demand < 0 || suppliers == 0) {
        return 0;
    }
    // C(d + k, k) with k = n - 1, built up one factor at a time; each partial
    // product is itself a binomial coefficient so the division is exact.
    unsigned __int128 result = 1;
    const auto k = static_cast<unsigned __int128>(suppliers - 1);
    for (unsigned __int128 j = 1; j <= k; ++j) {
        result = result * (static_cast<unsigned __int128>(demand) + j) / j;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

void check_enumeration_capacity(const Scenario& scen)
{
    const auto count = composition_count(scen.demand, scen.supplier_count());
    if (count > kEnumerationLimit) {
        throw CapacityError("demand " + std::to_string(scen.demand) + " over " +
                            std::to_string(scen.supplier_count()) + " suppliers has " +
                            (count == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                               : std::to_string(count)) +
                            " compositions, above the exhaustive-search limit of " +
                            std::to_string(kEnumerationLimit) + "; use the genetic optimizer instead");
    }
}

bool next_composition(std::span<Units> x)
{
    const std::size_t n = x.size();
    std::size_t k = n;
    for (std::size_t i = n; i-- > 1;) {
        if (x[i] > 0) {
            k = i;
            break;
        }
    }
    if (k == n) {
        return false;
    }
    const Units tail = x[k];
    x[k] = 0;
    x[k - 1] += 1;
    x[n - 1] = tail - 1;
    return true;
}

EnumerationReport enumerate(const Scenario& scen, bool relax, const CompositionVisitor& visit)
{
    scen.validate();
    check_enumeration_capacity(scen);
    const auto tables = kernels::EvalTables::from(scen);
    EnumerationReport report;
    report.demand = scen.demand;
    report.relaxed_count = composition_count(scen.demand, scen.supplier_count());
    report.feasible_count = scan_range(scen, tables, relax, {0, scen.demand}, visit);
    return report;
}

EnumerationReport count_feasible(const Scenario& scen, bool relax, unsigned threads)
{
    scen.validate();
    check_enumeration_capacity(scen);
    const auto tables = kernels::EvalTables::from(scen);
    const auto ranges = partition_first_share(scen.demand, resolve_threads(threads));
    std::vector<std::uint64_t> counts(ranges.size());
    for_each_chunk(ranges.size(), resolve_threads(threads), [&](std::size_t c) {
        counts[c] = scan_range(scen, tables, relax, ranges[c], [](auto, const auto&) {});
    });
    EnumerationReport report;
    report.demand = scen.demand;
    report.relaxed_count = composition_count(scen.demand, scen.supplier_count());
    for (auto c : counts) {
        report.feasible_count += c;
    }
    return report;
}

std::vector<FrontPoint> exact_pareto_front(const Scenario& scen, bool relax, unsigned threads)
{
    scen.validate();
    check_enumeration_capacity(scen);
    const auto tables = kernels::EvalTables::from(scen);
    const unsigned workers = resolve_threads(threads);
    const auto ranges = partition_first_share(scen.demand, workers);

    std::vector<ParetoArchive> partial(ranges.size());
    for_each_chunk(ranges.size(), workers, [&](std::size_t c) {
        scan_range(scen, tables, relax, ranges[c], [&](std::span<const Units> shares, const Evaluation& e) {
            partial[c].offer({Distribution({shares.begin(), shares.end()}), e.point, PointOrigin::enumeration});
        });
    });

    // Earlier chunks hold lexicographically smaller distributions, so merging
    // in chunk order preserves the first-seen tie rule.
    ParetoArchive merged;
    for (auto& archive : partial) {
        for (auto& p : std::move(archive).release()) {
            merged.offer(std::move(p));
        }
    }
    return std::move(merged).release();
}

FrontPoint weighted_sum_optimum(const Scenario& scen, bool relax, unsigned threads)
{
    scen.validate();
    check_enumeration_capacity(scen);
    const auto tables = kernels::EvalTables::from(scen);
    const unsigned workers = resolve_threads(threads);
    const auto ranges = partition_first_share(scen.demand, workers);

    struct Best {
        double fitness = -std::numeric_limits<double>::infinity();
        std::optional<FrontPoint> point;
    };
    std::vector<Best> partial(ranges.size());
    for_each_chunk(ranges.size(), workers, [&](std::size_t c) {
        auto& best = partial[c];
        scan_range(scen, tables, relax, ranges[c], [&](std::span<const Units> shares, const Evaluation& e) {
            const double f = fitness(e.point, scen);
            if (!best.point || f > best.fitness) {
                best.fitness = f;
                best.point = FrontPoint{Distribution({shares.begin(), shares.end()}), e.point,
                                        PointOrigin::enumeration};
            }
        });
    });

    Best overall;
    for (auto& b : partial) {
        if (b.point && (!overall.point || b.fitness > overall.fitness)) {
            overall = std::move(b);
        }
    }
    if (!overall.point) {
        throw InfeasibleError("no feasible distribution for demand " + std::to_string(scen.demand));
    }
    return std::move(*overall.point);
}

} // namespace riskfront
