#pragma once

#include "riskfront/evaluator.hpp"
#include "riskfront/model.hpp"
#include "riskfront/objectives.hpp"
#include "riskfront/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace riskfront {

struct GaConfig {
    std::size_t initial_population = 200;
    // Children spawned in generation g (1-based) is spawn_schedule[g - 1]; the
    // schedule's last entry repeats, and an empty schedule repeats
    // initial_population.
    std::vector<std::size_t> spawn_schedule;
    double crossover_ratio = 0.8;
    std::size_t max_generations = 100;
    std::uint64_t seed = 0;
    bool relax = false;
    // Mutation trials per generation are floor(crossover_ratio * mutation_base);
    // 0 uses the current population size as the base.
    std::size_t mutation_base = 100;

    void validate() const;
    std::size_t spawn_count(std::size_t generation) const;
    std::size_t mutation_trials(std::size_t population) const;
};

// Spawned distributions that stay infeasible after this many redraws are
// kept with kInfeasibleFitness.
inline constexpr int kMaxRedraws = 1000;
inline constexpr double kInfeasibleFitness = -1.0;

struct Individual {
    Distribution distribution;
    ObjectivePoint point;
    double fitness = 0.0;
    bool feasible = true;
};

/// Counters for one generation, laid out like the published population table.
///
/// `children` is the pool entering selection (carry_in + spawned);
/// surviving == children - eliminated - accepted_mutants, because every
/// accepted crossover child replaces its two parents.
struct GenerationStats {
    std::size_t generation = 0; // 1-based
    std::size_t carry_in = 0;
    std::size_t spawned = 0;
    std::size_t children = 0;
    std::size_t mutations = 0; // crossover trials performed
    std::size_t accepted_mutants = 0;
    std::size_t eliminated = 0;
    std::size_t surviving = 0;
    double best_fitness = 0.0;

    // eliminated / children, the ratio the population table reports.
    double elimination_ratio() const;
    // eliminated / spawned.
    double spawn_elimination_ratio() const;
};

struct GaState {
    std::vector<Individual> population; // sorted, best first
    std::size_t generation = 0;
    std::uint64_t evaluations = 0;
};

struct GaResult {
    Distribution best;
    double best_fitness = 0.0;
    std::vector<GenerationStats> history;
    std::vector<Individual> final_population;
    std::uint64_t evaluations = 0; // individuals whose fitness was computed
};

// Called after every generation with the re-ranked population.
using GenerationObserver = std::function<void(const GenerationStats&, std::span<const Individual>)>;

/// Uniform random compositions of d into n parts: n - 1 bar positions are
/// drawn without replacement from the d + n - 1 stars-and-bars slots.
std::vector<Distribution> spawn_random(Units demand, std::size_t suppliers, std::size_t count, Rng& rng);

/// Rescales genes to sum to d: floor(x_i * d / sum), then hands the leftover
/// units to the largest fractional parts (lower index first on ties). An
/// all-zero input becomes (d, 0, ..., 0).
Distribution repair(std::span<const Units> genes, Units demand);

// Child whose gene i is a_i or b_i with probability 1/2 each, before repair.
std::vector<Units> mix_genes(const Distribution& a, const Distribution& b, Rng& rng);

// mix_genes followed by repair to the parents' total.
Distribution crossover(const Distribution& a, const Distribution& b, Rng& rng);

// Descending fitness, ties by ascending distribution.
void rank_population(std::vector<Individual>& population);

// Random, ranked starting population for run_ga.
GaState initial_state(const Scenario& scen, const GaConfig& cfg, Objective objective, Rng& rng);

/// One selection + mutation round:
///  1. spawn the scheduled number of random children;
///  2. eliminate every child whose fitness does not beat the current best;
///     survivors join the population;
///  3. run the crossover trials; a child that beats both parents replaces them;
///  4. re-rank.
GenerationStats run_generation(GaState& state, const Scenario& scen, const GaConfig& cfg, Objective objective,
                               Rng& rng);

/// Runs generations until max_generations or until one eliminates no child.
/// Generation g draws from the stream derived from (seed, g), the initial
/// population from (seed, 0).
GaResult run_ga(const Scenario& scen, const GaConfig& cfg, Objective objective,
                const GenerationObserver& observer = {});

} // namespace riskfront
