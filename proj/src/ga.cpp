#include "riskfront/ga.hpp"
#include "riskfront/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace riskfront {

namespace {

Individual make_individual(Distribution dist, const Evaluation& eval, const Scenario& scen, const GaConfig& cfg,
                           Objective objective)
{
    Individual ind;
    ind.distribution = std::move(dist);
    ind.point = eval.point;
    ind.feasible = cfg.relax || eval.within_ceiling;
    ind.fitness = ind.feasible ? objective_fitness(objective, eval.point, scen) : kInfeasibleFitness;
    return ind;
}

// Draws `count` individuals, redrawing infeasible ones up to kMaxRedraws times.
std::vector<Individual> spawn_individuals(const Scenario& scen, const GaConfig& cfg, Objective objective,
                                          const BatchEvaluator& evaluator, std::size_t count, Rng& rng)
{
    const std::size_t n = scen.supplier_count();
    std::vector<Distribution> drawn;
    drawn.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Distribution d = spawn_random(scen.demand, n, 1, rng).front();
        for (int attempt = 1; !cfg.relax && attempt < kMaxRedraws && !is_feasible(d, scen, false); ++attempt) {
            d = spawn_random(scen.demand, n, 1, rng).front();
        }
        drawn.push_back(std::move(d));
    }
    const auto evals = evaluator.evaluate(drawn);
    std::vector<Individual> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(make_individual(std::move(drawn[k]), evals[k], scen, cfg, objective));
    }
    return out;
}

} // namespace

void GaConfig::validate() const
{
    if (initial_population < 2) {
        throw ConfigError("initial population must be at least 2");
    }
    if (!(crossover_ratio >= 0.0 && crossover_ratio <= 1.0)) {
        throw ConfigError("crossover ratio must lie in [0, 1]");
    }
    if (max_generations < 1) {
        throw ConfigError("max generations must be at least 1");
    }
    for (auto s : spawn_schedule) {
        if (s < 1) {
            throw ConfigError("spawn schedule entries must be positive");
        }
    }
}

std::size_t GaConfig::spawn_count(std::size_t generation) const
{
    if (spawn_schedule.empty()) {
        return initial_population;
    }
    const std::size_t idx = generation == 0 ? 0 : generation - 1;
    return spawn_schedule[std::min(idx, spawn_schedule.size() - 1)];
}

std::size_t GaConfig::mutation_trials(std::size_t population) const
{
    const std::size_t base = mutation_base == 0 ? population : mutation_base;
    return static_cast<std::size_t>(std::floor(crossover_ratio * static_cast<double>(base)));
}

double GenerationStats::elimination_ratio() const
{
    return children == 0 ? 0.0 : static_cast<double>(eliminated) / static_cast<double>(children);
}

double GenerationStats::spawn_elimination_ratio() const
{
    return spawned == 0 ? 0.0 : static_cast<double>(eliminated) / static_cast<double>(spawned);
}

std::vector<Distribution> spawn_random(Units demand, std::size_t suppliers, std::size_t count, Rng& rng)
{
    if (suppliers == 0) {
        throw InputError("cannot spawn distributions over zero suppliers");
    }
    const auto slots = static_cast<std::uint64_t>(demand) + suppliers - 1;
    const std::size_t bars = suppliers - 1;

    std::vector<Distribution> out;
    out.reserve(count);
    std::vector<std::uint64_t> chosen;
    for (std::size_t c = 0; c < count; ++c) {
        // Floyd's sampling of `bars` distinct slots.
        chosen.clear();
        for (std::uint64_t j = slots - bars; j < slots; ++j) {
            const std::uint64_t t = rng.below(j + 1);
            const bool taken = std::find(chosen.begin(), chosen.end(), t) != chosen.end();
            chosen.push_back(taken ? j : t);
        }
        std::sort(chosen.begin(), chosen.end());

        std::vector<Units> x(suppliers);
        std::uint64_t prev = 0; // one past the previous bar
        for (std::size_t i = 0; i < bars; ++i) {
            x[i] = static_cast<Units>(chosen[i] - prev);
            prev = chosen[i] + 1;
        }
        x[bars] = static_cast<Units>(slots - prev);
        out.emplace_back(std::move(x));
    }
    return out;
}

Distribution repair(std::span<const Units> genes, Units demand)
{
    const std::size_t n = genes.size();
    std::vector<Units> x(genes.begin(), genes.end());
    const Units sum = std::accumulate(x.begin(), x.end(), Units{0});
    if (sum == demand) {
        return Distribution(std::move(x));
    }
    if (sum == 0) {
        std::fill(x.begin(), x.end(), 0);
        if (n > 0) x[0] = demand;
        return Distribution(std::move(x));
    }

    std::vector<Units> remainder(n);
    Units assigned = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto scaled = static_cast<__int128>(genes[i]) * demand;
        x[i] = static_cast<Units>(scaled / sum);
        remainder[i] = static_cast<Units>(scaled % sum);
        assigned += x[i];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (Units left = demand - assigned, k = 0; left > 0; --left, ++k) {
        x[order[static_cast<std::size_t>(k) % n]] += 1;
    }
    return Distribution(std::move(x));
}

std::vector<Units> mix_genes(const Distribution& a, const Distribution& b, Rng& rng)
{
    if (a.size() != b.size()) {
        throw InputError("crossover parents differ in supplier count");
    }
    std::vector<Units> child(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        child[i] = rng.coin() ? a[i] : b[i];
    }
    return child;
}

Distribution crossover(const Distribution& a, const Distribution& b, Rng& rng)
{
    return repair(mix_genes(a, b, rng), a.total());
}

void rank_population(std::vector<Individual>& population)
{
    std::sort(population.begin(), population.end(), [](const Individual& l, const Individual& r) {
        if (l.fitness != r.fitness) return l.fitness > r.fitness;
        return l.distribution < r.distribution;
    });
}

GaState initial_state(const Scenario& scen, const GaConfig& cfg, Objective objective, Rng& rng)
{
    const BatchEvaluator evaluator(scen);
    GaState state;
    state.population = spawn_individuals(scen, cfg, objective, evaluator, cfg.initial_population, rng);
    state.evaluations = state.population.size();
    rank_population(state.population);
    return state;
}

GenerationStats run_generation(GaState& state, const Scenario& scen, const GaConfig& cfg, Objective objective,
                               Rng& rng)
{
    if (state.population.empty()) {
        throw InputError("run_generation needs a non-empty population");
    }
    const BatchEvaluator evaluator(scen);
    auto& pop = state.population;

    GenerationStats stats;
    stats.generation = ++state.generation;
    stats.carry_in = pop.size();

    // Selection against the incumbent best.
    const double threshold = pop.front().fitness;
    auto spawned = spawn_individuals(scen, cfg, objective, evaluator, cfg.spawn_count(stats.generation), rng);
    stats.spawned = spawned.size();
    stats.children = stats.carry_in + stats.spawned;
    state.evaluations += spawned.size();
    for (auto& child : spawned) {
        if (child.fitness <= threshold) {
            ++stats.eliminated;
        } else {
            pop.push_back(std::move(child));
        }
    }

    // Crossover trials.
    const std::size_t trials = cfg.mutation_trials(pop.size());
    for (std::size_t t = 0; t < trials && pop.size() >= 2; ++t) {
        const auto i = static_cast<std::size_t>(rng.below(pop.size()));
        auto j = static_cast<std::size_t>(rng.below(pop.size() - 1));
        if (j >= i) ++j;
        Distribution child = crossover(pop[i].distribution, pop[j].distribution, rng);
        const auto eval = evaluator.evaluate(child);
        ++stats.mutations;
        ++state.evaluations;
        Individual mutant = make_individual(std::move(child), eval, scen, cfg, objective);
        if (mutant.fitness > pop[i].fitness && mutant.fitness > pop[j].fitness) {
            pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
            pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
            pop.push_back(std::move(mutant));
            ++stats.accepted_mutants;
        }
    }

    rank_population(pop);
    stats.surviving = pop.size();
    stats.best_fitness = pop.front().fitness;
    return stats;
}

GaResult run_ga(const Scenario& scen, const GaConfig& cfg, Objective objective, const GenerationObserver& observer)
{
    scen.validate();
    cfg.validate();

    Rng init_rng = Rng::derive(cfg.seed, 0);
    GaState state = initial_state(scen, cfg, objective, init_rng);

    GaResult result;
    for (std::size_t g = 1; g <= cfg.max_generations; ++g) {
        Rng rng = Rng::derive(cfg.seed, g);
        const auto stats = run_generation(state, scen, cfg, objective, rng);
        result.history.push_back(stats);
        if (observer) {
            observer(stats, state.population);
        }
        if (stats.eliminated == 0) {
            break;
        }
    }
    result.best = state.population.front().distribution;
    result.best_fitness = state.population.front().fitness;
    result.final_population = std::move(state.population);
    result.evaluations = state.evaluations;
    return result;
}

} // namespace riskfront
