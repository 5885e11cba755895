#include "snsga/nsga.hpp"

namespace snsga {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw StructuralError("dominates: objective vector size mismatch");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

void GeneticParams::validate() const {
    if (!(crossover_ratio > 0)) throw StructuralError("crossover ratio must be > 0");
    if (!(mutation_scale > 0)) throw StructuralError("mutation scale must be > 0");
    if (!(mutation_shrink > 0) || mutation_shrink > 1)
        throw StructuralError("mutation shrink must be in (0, 1]");
}

std::vector<std::vector<int>> fast_nondominated_sort(Population& population) {
    const int n = static_cast<int>(population.members.size());
    for (const auto& m : population.members)
        if (!m.evaluated())
            throw StructuralError("fast_nondominated_sort: unevaluated member");

    std::vector<std::vector<int>> dominated(n);  // S_i: members i dominates
    std::vector<int> domination_count(n, 0);     // n_i: members dominating i

    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (dominates(population.members[i].objectives,
                          population.members[j].objectives))
                dominated[i].push_back(j);
            else if (dominates(population.members[j].objectives,
                               population.members[i].objectives))
                ++domination_count[i];
        }
        if (domination_count[i] == 0) current.push_back(i);
    }

    int rank = 0;
    while (!current.empty()) {
        for (int i : current) population.members[i].rank = rank;
        std::vector<int> next;
        for (int i : current)
            for (int j : dominated[i])
                if (--domination_count[j] == 0) next.push_back(j);
        fronts.push_back(std::move(current));
        current = std::move(next);
        ++rank;
    }
    return fronts;
}

namespace {

// Tournament order: rank, then scalar fitness, then index.
bool tournament_better(const Population& pop, int a, int b) {
    const Individual& ia = pop.members[a];
    const Individual& ib = pop.members[b];
    if (!ia.rank || !ib.rank)
        throw StructuralError("binary_tournament: ranks not assigned");
    if (*ia.rank != *ib.rank) return *ia.rank < *ib.rank;
    if (ia.fitness() != ib.fitness()) return ia.fitness() < ib.fitness();
    return a < b;
}

}  // namespace

const Individual& binary_tournament(const Population& population, std::mt19937_64& rng) {
    if (population.members.empty())
        throw StructuralError("binary_tournament: empty population");
    std::uniform_int_distribution<int> pick(
        0, static_cast<int>(population.members.size()) - 1);
    const int a = pick(rng);
    const int b = pick(rng);
    return population.members[tournament_better(population, a, b) ? a : b];
}

Individual crossover(const Individual& parent_a, const Individual& parent_b,
                     double ratio, const Bounds& bounds, std::mt19937_64& rng) {
    if (parent_a.position.size() != parent_b.position.size())
        throw StructuralError("crossover: parent dimension mismatch");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Individual child;
    child.position.resize(parent_a.position.size());
    for (std::size_t i = 0; i < child.position.size(); ++i) {
        const double r = unit(rng);
        child.position[i] = parent_a.position[i] +
                            r * ratio * (parent_b.position[i] - parent_a.position[i]);
    }
    child.position = clip_to_bounds(std::move(child.position), bounds);
    return child;
}

Individual mutate(Individual individual, double scale, double shrink, int generation,
                  int max_generations, const Bounds& bounds, std::mt19937_64& rng) {
    if (generation < 0 || generation > max_generations)
        throw StructuralError("mutate: generation out of range");
    const double shrink_factor =
        1.0 - shrink * static_cast<double>(generation) / max_generations;
    std::normal_distribution<double> noise(0.0, 1.0);
    for (std::size_t i = 0; i < individual.position.size(); ++i) {
        const double width = bounds.at(i).high - bounds.at(i).low;
        const double sigma = scale * shrink_factor * width;
        individual.position[i] += sigma * noise(rng);
    }
    individual.position = clip_to_bounds(std::move(individual.position), bounds);
    individual.objectives.clear();
    individual.rank.reset();
    return individual;
}

}  // namespace snsga
