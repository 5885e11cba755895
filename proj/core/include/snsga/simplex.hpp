#pragma once

#include "snsga/problem.hpp"

namespace snsga {

/// Nelder-Mead move coefficients plus the regular-simplex edge length.
struct SimplexCoefficients {
    double alpha = 1.0;  // reflection, > 0
    double gamma = 4.0;  // expansion, > 1
    double beta = 0.2;   // contraction, in [0, 1]
    double side = 2.0;   // regular-simplex edge length, > 0

    void validate() const;
};

/// n+1 evaluated vertices in n dimensions.
struct Simplex {
    std::vector<Individual> vertices;
    int dimension = 0;

    /// Builds from n+1 evaluated individuals of dimension n.
    static Simplex from_vertices(std::vector<Individual> vertices);

    /// Index of the worst vertex (highest fitness, ties to lowest index).
    int worst_index() const;
    /// Index of the best vertex (lowest fitness, ties to lowest index).
    int best_index() const;
    const Individual& best() const { return vertices[best_index()]; }
    const Individual& worst() const { return vertices[worst_index()]; }

    /// Stable sort by fitness, best first.
    void sort_vertices();
};

/// Vertices of a regular simplex of edge length `side` anchored at
/// `base`: x_0 = base, x_j = base + p e_j + q sum_{s != j} e_s.
std::vector<std::vector<double>> regular_simplex(const std::vector<double>& base,
                                                 double side);

std::vector<double> reflect(const std::vector<double>& worst,
                            const std::vector<double>& centroid, double alpha);
std::vector<double> expand(const std::vector<double>& reflected,
                           const std::vector<double>& centroid, double gamma);
std::vector<double> contract(const std::vector<double>& worst,
                             const std::vector<double>& centroid, double beta);

/// Mean of the n vertices excluding the worst one.
std::vector<double> centroid_excluding_worst(const Simplex& simplex);

/// Runs up to max_iters reflect/expand/contract iterations, replacing
/// the worst vertex each time. Candidates are clipped to bounds before
/// evaluation. Uses 1-2 evaluations per iteration; stops early if the
/// counter budget runs out and returns the simplex as it stands.
Simplex nm_iterate(Simplex simplex, const SimplexCoefficients& coeffs,
                   const ObjectiveProblem& problem, EvalCounter& counter,
                   int max_iters);

}  // namespace snsga
