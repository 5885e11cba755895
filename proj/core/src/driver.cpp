#include "snsga/driver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "snsga/rng.hpp"

namespace snsga {

void SnsgaConfig::validate() const {
    if (population_size < 1) throw StructuralError("population_size must be >= 1");
    if (max_generations < 1) throw StructuralError("max_generations must be >= 1");
    if (simplex_max_iters < 1) throw StructuralError("simplex_max_iters must be >= 1");
    if (init_simplex_iters < 0) throw StructuralError("init_simplex_iters must be >= 0");
    if (exploration_simplexes < 0)
        throw StructuralError("exploration_simplexes must be >= 0");
    if (eval_budget && *eval_budget < 1) throw StructuralError("eval_budget must be >= 1");
    simplex_coefficients().validate();
    genetic_params().validate();
}

SimplexCoefficients SnsgaConfig::simplex_coefficients() const {
    return SimplexCoefficients{reflection, expansion, contraction, simplex_side};
}

GeneticParams SnsgaConfig::genetic_params() const {
    return GeneticParams{crossover_ratio, mutation_scale, mutation_shrink};
}

const Individual& best_of(const Population& population) {
    if (population.members.empty()) throw StructuralError("best_of: empty population");
    int best = 0;
    for (int i = 1; i < static_cast<int>(population.members.size()); ++i)
        if (population.members[i].fitness() < population.members[best].fitness())
            best = i;
    return population.members[best];
}

namespace {

/// Builds a regular simplex around a uniform-random base point and
/// refines it briefly. Returns the refined best vertex, or the raw
/// evaluated vertices if the budget ran out mid-construction.
std::vector<Individual> refined_random_vertex(const ObjectiveProblem& problem,
                                              const SnsgaConfig& config,
                                              std::mt19937_64& rng,
                                              EvalCounter& counter) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> base(problem.dimension);
    for (int d = 0; d < problem.dimension; ++d)
        base[d] = problem.bounds[d].low +
                  unit(rng) * (problem.bounds[d].high - problem.bounds[d].low);

    std::vector<Individual> vertices;
    try {
        for (auto& point : regular_simplex(base, config.simplex_side)) {
            Individual v;
            v.position = clip_to_bounds(std::move(point), problem.bounds);
            v.objectives = evaluate_counted(problem, v.position, counter);
            vertices.push_back(std::move(v));
        }
    } catch (const BudgetExhausted&) {
        return vertices;  // partial, evaluations not wasted
    }

    Simplex simplex = Simplex::from_vertices(std::move(vertices));
    const int refine_iters =
        std::min(config.init_simplex_iters, config.simplex_max_iters);
    if (refine_iters > 0)
        simplex = nm_iterate(std::move(simplex), config.simplex_coefficients(),
                             problem, counter, refine_iters);
    return {simplex.best()};
}

}  // namespace

Population initialize_population(const ObjectiveProblem& problem,
                                 const SnsgaConfig& config, std::mt19937_64& rng,
                                 EvalCounter& counter) {
    Population pop;
    pop.generation = 0;
    while (static_cast<int>(pop.members.size()) < config.population_size &&
           !counter.exhausted()) {
        for (auto& v : refined_random_vertex(problem, config, rng, counter))
            if (static_cast<int>(pop.members.size()) < config.population_size)
                pop.members.push_back(std::move(v));
    }
    return pop;
}

namespace {

double mean_fitness(const Population& pop) {
    double sum = 0.0;
    for (const auto& m : pop.members) sum += m.fitness();
    return sum / static_cast<double>(pop.members.size());
}

bool target_reached(const SnsgaConfig& config, double best, double fobj_init) {
    if (!config.target_objective) return false;
    return std::abs(best - *config.target_objective) <
           1e-4 * std::abs(fobj_init) + 1e-6;
}

}  // namespace

RunResult run(const ObjectiveProblem& problem, const SnsgaConfig& config) {
    problem.validate();
    config.validate();

    EvalCounter counter(config.eval_budget);
    std::mt19937_64 init_rng = substream(config.rng_seed, 0);
    Population pop = initialize_population(problem, config, init_rng, counter);
    if (pop.members.empty())
        throw StructuralError("eval_budget too small to initialize any individual");

    RunResult result;
    result.initial_mean_objective = mean_fitness(pop);
    Individual best = best_of(pop);
    result.trace.push_back({0, best.fitness(), counter.count()});

    const Bounds& bounds = problem.bounds;
    const SimplexCoefficients coeffs = config.simplex_coefficients();
    const int n_pop = config.population_size;

    bool success = target_reached(config, best.fitness(), result.initial_mean_objective);

    if (!success && static_cast<int>(pop.members.size()) == n_pop) {
        for (int gen = 1; gen <= config.max_generations; ++gen) {
            if (counter.exhausted()) break;
            fast_nondominated_sort(pop);
            std::mt19937_64 rng = substream(config.rng_seed, gen);

            std::vector<Individual> offspring;
            offspring.reserve(n_pop);
            for (int k = 0; k < n_pop; ++k) {
                const Individual& pa = binary_tournament(pop, rng);
                const Individual& pb = binary_tournament(pop, rng);
                Individual child =
                    crossover(pa, pb, config.crossover_ratio, bounds, rng);
                child = mutate(std::move(child), config.mutation_scale,
                               config.mutation_shrink, gen, config.max_generations,
                               bounds, rng);
                try {
                    child.objectives = evaluate_counted(problem, child.position, counter);
                } catch (const BudgetExhausted&) {
                    break;
                }
                offspring.push_back(std::move(child));
            }

            // Exploitation: the incumbent best plus the n most promising
            // offspring form one simplex and get the full inner-loop
            // refinement budget, so precision compounds across generations.
            const int n_vertices = problem.dimension + 1;
            if (!counter.exhausted() &&
                static_cast<int>(offspring.size()) >= problem.dimension) {
                std::vector<int> order(offspring.size());
                std::iota(order.begin(), order.end(), 0);
                std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                    return offspring[a].fitness() < offspring[b].fitness();
                });
                std::vector<Individual> vertices;
                vertices.reserve(n_vertices);
                vertices.push_back(best);
                for (int i = 0; i < problem.dimension; ++i)
                    vertices.push_back(offspring[order[i]]);
                Simplex simplex = nm_iterate(Simplex::from_vertices(std::move(vertices)),
                                             coeffs, problem, counter,
                                             config.simplex_max_iters);
                for (int i = 0; i < problem.dimension; ++i)
                    offspring[order[i]] = std::move(simplex.vertices[i]);
                offspring.push_back(std::move(simplex.vertices[problem.dimension]));
            }

            // Exploration: a few fresh random simplexes per generation keep
            // the search covering the whole domain; their best vertices
            // compete in the same truncation as the offspring.
            for (int e = 0;
                 e < config.exploration_simplexes && !counter.exhausted(); ++e)
                for (auto& v : refined_random_vertex(problem, config, rng, counter))
                    offspring.push_back(std::move(v));

            // (mu + lambda) truncation by (rank, fitness, index).
            Population combined;
            combined.members = pop.members;
            for (auto& child : offspring) combined.members.push_back(std::move(child));
            fast_nondominated_sort(combined);
            std::vector<int> order(combined.members.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                const Individual& ia = combined.members[a];
                const Individual& ib = combined.members[b];
                if (*ia.rank != *ib.rank) return *ia.rank < *ib.rank;
                if (ia.fitness() != ib.fitness()) return ia.fitness() < ib.fitness();
                return a < b;
            });
            Population next;
            next.generation = gen;
            next.members.reserve(n_pop);
            for (int i = 0; i < n_pop; ++i)
                next.members.push_back(std::move(combined.members[order[i]]));
            pop = std::move(next);

            best = best_of(pop);
            result.trace.push_back({gen, best.fitness(), counter.count()});
            result.generations_used = gen;

            if (target_reached(config, best.fitness(), result.initial_mean_objective)) {
                success = true;
                break;
            }
        }
    }

    result.best_point = best.position;
    result.best_objective = best.fitness();
    result.evaluations_used = counter.count();
    if (success)
        result.stop_reason = StopReason::target_reached;
    else if (counter.exhausted())
        result.stop_reason = StopReason::eval_budget;
    else
        result.stop_reason = StopReason::max_generations;
    return result;
}

}  // namespace snsga
