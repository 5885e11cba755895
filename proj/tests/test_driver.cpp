#include <doctest.h>

#include <atomic>

#include "snsga/benchmarks.hpp"
#include "snsga/driver.hpp"
#include "snsga/rng.hpp"

using namespace snsga;

namespace {

SnsgaConfig fast_config(std::uint64_t seed = 1) {
    SnsgaConfig config;
    config.rng_seed = seed;
    return config;
}

}  // namespace

TEST_CASE("config defaults match the tuned parameter set") {
    SnsgaConfig config;
    CHECK(config.population_size == 30);
    CHECK(config.max_generations == 60);
    CHECK(config.crossover_ratio == 1.2);
    CHECK(config.mutation_scale == 0.1);
    CHECK(config.mutation_shrink == 0.5);
    CHECK(config.simplex_side == 2.0);
    CHECK(config.reflection == 1.0);
    CHECK(config.expansion == 4.0);
    CHECK(config.contraction == 0.2);
    CHECK(config.simplex_max_iters == 30);
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("best_of picks minimal fitness with index tie-break") {
    Population pop;
    for (double f : {2.0, 1.0, 3.0}) {
        Individual v;
        v.position = {0.0};
        v.objectives = {f};
        pop.members.push_back(v);
    }
    CHECK(best_of(pop).fitness() == 1.0);

    Population equal;
    for (int i = 0; i < 3; ++i) {
        Individual v;
        v.position = {static_cast<double>(i)};
        v.objectives = {4.0};
        equal.members.push_back(v);
    }
    CHECK(best_of(equal).position[0] == 0.0);

    Population empty;
    CHECK_THROWS_AS(best_of(empty), StructuralError);
}

TEST_CASE("initialization yields exactly N_pop evaluated in-bounds members") {
    const auto& spec = find_benchmark("RC");
    EvalCounter counter;
    auto rng = substream(5, 0);
    const auto pop = initialize_population(spec.problem, fast_config(), rng, counter);
    CHECK(pop.members.size() == 30);
    for (const auto& m : pop.members) {
        CHECK(m.evaluated());
        CHECK(within_bounds(m.position, spec.problem.bounds));
    }
    CHECK(counter.count() > 0);
}

TEST_CASE("degenerate-width bounds collapse all draws to one coordinate") {
    // Width cannot be zero (bounds require low < high), so use a sliver.
    auto problem = make_scalar_problem("sliver", {{1.0, 1.0 + 1e-12}},
                                       [](const std::vector<double>& x) {
                                           return x[0];
                                       });
    EvalCounter counter;
    auto rng = substream(5, 0);
    const auto pop = initialize_population(problem, fast_config(), rng, counter);
    for (const auto& m : pop.members)
        CHECK(m.position[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("run improves on the initial population mean for the sphere") {
    auto problem = make_scalar_problem("sphere2", {{-100, 100}, {-100, 100}},
                                       [](const std::vector<double>& x) {
                                           return x[0] * x[0] + x[1] * x[1];
                                       });
    const auto result = run(problem, fast_config(3));
    CHECK(result.best_objective < result.initial_mean_objective);
    CHECK(result.best_objective < 1e-3);
}

TEST_CASE("constant objective yields a flat trace") {
    auto problem = make_scalar_problem("const", {{-1, 1}},
                                       [](const std::vector<double>&) { return 4.2; });
    SnsgaConfig config = fast_config(7);
    config.max_generations = 5;
    const auto result = run(problem, config);
    CHECK(result.best_objective == 4.2);
    for (const auto& record : result.trace) CHECK(record.best_objective == 4.2);
}

TEST_CASE("tiny budget terminates during initialization") {
    const auto& spec = find_benchmark("GP");
    SnsgaConfig config = fast_config(11);
    config.eval_budget = config.population_size;
    const auto result = run(spec.problem, config);
    CHECK(result.stop_reason == StopReason::eval_budget);
    CHECK(result.evaluations_used <= config.population_size);
    CHECK(result.generations_used == 0);
}

TEST_CASE("trace best objective is non-increasing (elitism)") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto& spec = find_benchmark("SH");
        SnsgaConfig config = fast_config(seed);
        config.max_generations = 20;
        const auto result = run(spec.problem, config);
        for (std::size_t i = 1; i < result.trace.size(); ++i)
            CHECK(result.trace[i].best_objective <=
                  result.trace[i - 1].best_objective);
    }
}

TEST_CASE("identical seeds give bit-identical traces") {
    const auto& spec = find_benchmark("RC");
    SnsgaConfig config = fast_config(99);
    config.max_generations = 15;
    const auto a = run(spec.problem, config);
    const auto b = run(spec.problem, config);
    CHECK(a.best_point == b.best_point);
    CHECK(a.best_objective == b.best_objective);
    CHECK(a.evaluations_used == b.evaluations_used);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].best_objective == b.trace[i].best_objective);
        CHECK(a.trace[i].evaluations == b.trace[i].evaluations);
    }
}

TEST_CASE("evaluations_used matches an independent tally") {
    const auto& spec = find_benchmark("Z2");
    std::atomic<long long> tally{0};
    ObjectiveProblem wrapped = spec.problem;
    auto inner = spec.problem.evaluate;
    wrapped.evaluate = [&tally, inner](const std::vector<double>& x) {
        ++tally;
        return inner(x);
    };
    SnsgaConfig config = fast_config(21);
    config.max_generations = 10;
    const auto result = run(wrapped, config);
    CHECK(result.evaluations_used == tally.load());
}

TEST_CASE("target objective stops the run early with success reason") {
    const auto& spec = find_benchmark("R2");
    SnsgaConfig config = fast_config(31);
    config.target_objective = spec.known_optimum_value;
    const auto result = run(spec.problem, config);
    if (result.stop_reason == StopReason::target_reached) {
        const double threshold =
            1e-4 * std::abs(result.initial_mean_objective) + 1e-6;
        CHECK(std::abs(result.best_objective - spec.known_optimum_value) < threshold);
        CHECK(result.generations_used < config.max_generations);
    }
}

TEST_CASE("best_objective re-evaluates to itself at best_point") {
    const auto& spec = find_benchmark("B2");
    const auto result = run(spec.problem, fast_config(43));
    CHECK(spec.problem.evaluate(result.best_point).front() ==
          doctest::Approx(result.best_objective));
}
