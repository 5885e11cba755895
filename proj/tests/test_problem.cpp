#include <doctest.h>

#include <random>

#include "snsga/benchmarks.hpp"
#include "snsga/problem.hpp"

using namespace snsga;

TEST_CASE("clip_to_bounds clamps at both ends") {
    CHECK(clip_to_bounds({5, -5}, {{-2, 2}, {-2, 2}}) == std::vector<double>{2, -2});
    CHECK(clip_to_bounds({0.5, 0.5}, {{0, 1}, {0, 1}}) ==
          std::vector<double>{0.5, 0.5});
    CHECK(clip_to_bounds({-3.2}, {{-3, 3}}) == std::vector<double>{-3});
}

TEST_CASE("clip_to_bounds rejects length mismatch") {
    CHECK_THROWS_AS(clip_to_bounds({1.0, 2.0}, {{0, 1}}), StructuralError);
}

TEST_CASE("clip_to_bounds is idempotent and fixes in-bounds points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> wide(-100, 100);
    Bounds bounds{{-3, 4}, {0, 1}, {-10, -2}};
    for (int i = 0; i < 200; ++i) {
        std::vector<double> x{wide(rng), wide(rng), wide(rng)};
        const auto once = clip_to_bounds(x, bounds);
        CHECK(clip_to_bounds(once, bounds) == once);
        CHECK(within_bounds(once, bounds));
        if (within_bounds(x, bounds)) CHECK(once == x);
    }
}

TEST_CASE("evaluate_counted returns known values and ticks the counter") {
    EvalCounter counter;
    CHECK(evaluate_counted(find_benchmark("R2").problem, {1, 1}, counter).front() ==
          doctest::Approx(0.0));
    CHECK(counter.count() == 1);

    for (int i = 0; i < 7; ++i)
        evaluate_counted(find_benchmark("Z2").problem, {1, 2}, counter);
    CHECK(evaluate_counted(find_benchmark("Z2").problem, {0, 0}, counter).front() ==
          doctest::Approx(0.0));
    CHECK(counter.count() == 9);

    EvalCounter fresh;
    CHECK(evaluate_counted(find_benchmark("B2").problem, {0, 0}, fresh).front() ==
          doctest::Approx(0.0));
    CHECK(fresh.count() == 1);
}

TEST_CASE("counter increases by exactly k over k calls") {
    std::mt19937_64 rng(11);
    const auto& problem = find_benchmark("RC").problem;
    std::uniform_int_distribution<int> draw_k(1, 50);
    for (int rep = 0; rep < 20; ++rep) {
        EvalCounter counter;
        const int k = draw_k(rng);
        for (int i = 0; i < k; ++i) evaluate_counted(problem, {0, 0}, counter);
        CHECK(counter.count() == k);
    }
}

TEST_CASE("non-finite objective raises NumericalFailure with the point") {
    auto bad = make_scalar_problem("bad", {{-1, 1}},
                                   [](const std::vector<double>&) {
                                       return std::numeric_limits<double>::infinity();
                                   });
    EvalCounter counter;
    CHECK_THROWS_AS(evaluate_counted(bad, {0.5}, counter), NumericalFailure);
    try {
        evaluate_counted(bad, {0.5}, counter);
    } catch (const NumericalFailure& e) {
        CHECK(e.point == std::vector<double>{0.5});
    }
}

TEST_CASE("budget exhaustion throws without incrementing") {
    const auto& problem = find_benchmark("GP").problem;
    EvalCounter counter(std::optional<long long>{2});
    evaluate_counted(problem, {0, 0}, counter);
    evaluate_counted(problem, {0, 0}, counter);
    CHECK(counter.exhausted());
    CHECK_THROWS_AS(evaluate_counted(problem, {0, 0}, counter), BudgetExhausted);
    CHECK(counter.count() == 2);
}

TEST_CASE("problem validation catches malformed bounds") {
    ObjectiveProblem p = make_scalar_problem(
        "flat", {{1, 1}}, [](const std::vector<double>&) { return 0.0; });
    CHECK_THROWS_AS(p.validate(), StructuralError);
}
