#pragma once

#include "snsga/nsga.hpp"
#include "snsga/problem.hpp"
#include "snsga/simplex.hpp"

namespace snsga {

/// The ten tuned parameters plus seed, optional budget, and the
/// optional success-target used by the experiment harness.
struct SnsgaConfig {
    int population_size = 30;      // N_pop
    int max_generations = 60;      // N_gen
    double crossover_ratio = 1.2;  // R_crs
    double mutation_scale = 0.1;   // a_mut
    double mutation_shrink = 0.5;  // b_mut
    double simplex_side = 2.0;     // a
    double reflection = 1.0;       // alpha
    double expansion = 4.0;        // gamma
    double contraction = 0.2;      // beta
    int simplex_max_iters = 30;    // i_max

    /// Inner iterations per initialization simplex; effective value is
    /// min(init_simplex_iters, simplex_max_iters).
    int init_simplex_iters = 5;

    /// Fresh uniform-random simplexes refined per generation; their best
    /// vertices join the offspring pool. This is the exploration role of
    /// the simplex engine between generations.
    int exploration_simplexes = 5;

    std::uint64_t rng_seed = 0;
    std::optional<long long> eval_budget;
    /// When set, the run stops once the best objective is within
    /// 1e-4*|initial mean| + 1e-6 of this value (success-style stop).
    std::optional<double> target_objective;

    void validate() const;
    SimplexCoefficients simplex_coefficients() const;
    GeneticParams genetic_params() const;
};

enum class StopReason { max_generations, eval_budget, target_reached };

struct TraceRecord {
    int generation;
    double best_objective;
    long long evaluations;
};

struct RunResult {
    std::vector<double> best_point;
    double best_objective = 0.0;
    long long evaluations_used = 0;
    int generations_used = 0;
    std::vector<TraceRecord> trace;
    double initial_mean_objective = 0.0;  // FOBJ_INIT
    StopReason stop_reason = StopReason::max_generations;
};

/// Uniform random base points, each refined by a short regular-simplex
/// descent; the best vertex of each becomes one member. Stops early on
/// budget exhaustion with however many members were completed.
Population initialize_population(const ObjectiveProblem& problem,
                                 const SnsgaConfig& config, std::mt19937_64& rng,
                                 EvalCounter& counter);

/// Full hybrid run: simplex-seeded initialization, then per generation
/// tournament selection + crossover + mutation, simplex refinement of the
/// incumbent best plus the best n offspring, a few fresh exploration
/// simplexes, and (mu+lambda) truncation by (rank, fitness).
RunResult run(const ObjectiveProblem& problem, const SnsgaConfig& config);

/// Member with minimal first objective, ties to lowest index.
const Individual& best_of(const Population& population);

}  // namespace snsga
