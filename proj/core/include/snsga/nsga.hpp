#pragma once

#include <random>

#include "snsga/problem.hpp"

namespace snsga {

/// Pareto dominance for minimization: a dominates b iff a <= b in every
/// objective and a < b in at least one.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

struct GeneticParams {
    double crossover_ratio = 1.2;  // R_crs
    double mutation_scale = 0.1;   // a_mut
    double mutation_shrink = 0.5;  // b_mut

    void validate() const;
};

/// Deb-style fast non-dominated sort. Assigns each member's rank to its
/// front index and returns the fronts as lists of member indices.
std::vector<std::vector<int>> fast_nondominated_sort(Population& population);

/// Draws two members uniformly at random and returns the better by
/// (rank, fitness, index).
const Individual& binary_tournament(const Population& population, std::mt19937_64& rng);

/// Per-coordinate arithmetic blend: c_i = a_i + r_i * ratio * (b_i - a_i)
/// with r_i uniform on [0,1]; clipped to bounds.
Individual crossover(const Individual& parent_a, const Individual& parent_b,
                     double ratio, const Bounds& bounds, std::mt19937_64& rng);

/// Gaussian perturbation with per-coordinate standard deviation
/// sigma_i = scale * (1 - shrink * generation / max_generations) * width_i,
/// clipped to bounds. Clears cached objectives.
Individual mutate(Individual individual, double scale, double shrink, int generation,
                  int max_generations, const Bounds& bounds, std::mt19937_64& rng);

}  // namespace snsga
