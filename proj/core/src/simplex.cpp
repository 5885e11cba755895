#include "snsga/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace snsga {

void SimplexCoefficients::validate() const {
    if (!(alpha > 0)) throw StructuralError("reflection coefficient must be > 0");
    if (!(gamma > 1)) throw StructuralError("expansion coefficient must be > 1");
    if (beta < 0 || beta > 1)
        throw StructuralError("contraction coefficient must be in [0, 1]");
    if (!(side > 0)) throw StructuralError("simplex side must be > 0");
}

Simplex Simplex::from_vertices(std::vector<Individual> vertices) {
    if (vertices.empty()) throw StructuralError("simplex needs vertices");
    const int n = static_cast<int>(vertices.front().position.size());
    if (static_cast<int>(vertices.size()) != n + 1)
        throw StructuralError("simplex needs exactly n+1 vertices");
    for (const auto& v : vertices) {
        if (static_cast<int>(v.position.size()) != n)
            throw StructuralError("simplex vertex dimension mismatch");
        if (!v.evaluated()) throw StructuralError("simplex vertex not evaluated");
    }
    Simplex s;
    s.vertices = std::move(vertices);
    s.dimension = n;
    return s;
}

int Simplex::worst_index() const {
    int h = 0;
    for (int i = 1; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i].fitness() > vertices[h].fitness()) h = i;
    return h;
}

int Simplex::best_index() const {
    int b = 0;
    for (int i = 1; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i].fitness() < vertices[b].fitness()) b = i;
    return b;
}

void Simplex::sort_vertices() {
    std::stable_sort(vertices.begin(), vertices.end(),
                     [](const Individual& a, const Individual& b) {
                         return a.fitness() < b.fitness();
                     });
}

std::vector<std::vector<double>> regular_simplex(const std::vector<double>& base,
                                                 double side) {
    const int n = static_cast<int>(base.size());
    if (n < 1) throw StructuralError("regular_simplex: dimension must be >= 1");
    if (!(side > 0)) throw StructuralError("regular_simplex: side must be > 0");

    const double p = side / (n * std::sqrt(2.0)) * (std::sqrt(n + 1.0) + n - 1.0);
    const double q = side / (n * std::sqrt(2.0)) * (std::sqrt(n + 1.0) - 1.0);

    std::vector<std::vector<double>> vertices;
    vertices.reserve(n + 1);
    vertices.push_back(base);
    for (int j = 0; j < n; ++j) {
        std::vector<double> v(base);
        for (int s = 0; s < n; ++s) v[s] += (s == j) ? p : q;
        vertices.push_back(std::move(v));
    }
    return vertices;
}

namespace {

std::vector<double> affine(const std::vector<double>& a, double wa,
                           const std::vector<double>& b, double wb) {
    if (a.size() != b.size()) throw StructuralError("simplex move: dimension mismatch");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = wa * a[i] + wb * b[i];
    return out;
}

}  // namespace

std::vector<double> reflect(const std::vector<double>& worst,
                            const std::vector<double>& centroid, double alpha) {
    if (!(alpha > 0)) throw StructuralError("reflect: alpha must be > 0");
    return affine(centroid, 1.0 + alpha, worst, -alpha);
}

std::vector<double> expand(const std::vector<double>& reflected,
                           const std::vector<double>& centroid, double gamma) {
    if (!(gamma > 1)) throw StructuralError("expand: gamma must be > 1");
    return affine(reflected, gamma, centroid, 1.0 - gamma);
}

std::vector<double> contract(const std::vector<double>& worst,
                             const std::vector<double>& centroid, double beta) {
    if (beta < 0 || beta > 1) throw StructuralError("contract: beta must be in [0, 1]");
    return affine(worst, beta, centroid, 1.0 - beta);
}

std::vector<double> centroid_excluding_worst(const Simplex& simplex) {
    const int h = simplex.worst_index();
    const int n = simplex.dimension;
    std::vector<double> c(n, 0.0);
    for (int i = 0; i < static_cast<int>(simplex.vertices.size()); ++i) {
        if (i == h) continue;
        for (int d = 0; d < n; ++d) c[d] += simplex.vertices[i].position[d];
    }
    for (int d = 0; d < n; ++d) c[d] /= n;
    return c;
}

Simplex nm_iterate(Simplex simplex, const SimplexCoefficients& coeffs,
                   const ObjectiveProblem& problem, EvalCounter& counter,
                   int max_iters) {
    coeffs.validate();
    if (max_iters < 1) throw StructuralError("nm_iterate: max_iters must be >= 1");

    auto eval_at = [&](std::vector<double> point) {
        point = clip_to_bounds(std::move(point), problem.bounds);
        Individual ind;
        ind.objectives = evaluate_counted(problem, point, counter);
        ind.position = std::move(point);
        return ind;
    };

    try {
        for (int iter = 0; iter < max_iters; ++iter) {
            const int h = simplex.worst_index();
            const double f_best = simplex.best().fitness();
            const double f_worst = simplex.vertices[h].fitness();
            const std::vector<double> centroid = centroid_excluding_worst(simplex);

            Individual refl =
                eval_at(reflect(simplex.vertices[h].position, centroid, coeffs.alpha));

            if (refl.fitness() < f_best) {
                Individual exp = eval_at(expand(refl.position, centroid, coeffs.gamma));
                simplex.vertices[h] =
                    exp.fitness() < refl.fitness() ? std::move(exp) : std::move(refl);
            } else if (refl.fitness() < f_worst) {
                simplex.vertices[h] = std::move(refl);
            } else {
                // Paper-style contraction toward the centroid; the worst
                // vertex is replaced unconditionally (no shrink step).
                Individual con =
                    eval_at(contract(simplex.vertices[h].position, centroid, coeffs.beta));
                simplex.vertices[h] = std::move(con);
            }
        }
    } catch (const BudgetExhausted&) {
        // Partial progress is kept; the caller checks the counter.
    }
    return simplex;
}

}  // namespace snsga
