// Microbenchmarks for the hot paths: simplex construction, the inner
// Nelder-Mead loop, non-dominated sorting, and timetable decoding.

#include <benchmark/benchmark.h>

#include <random>

#include "snsga/benchmarks.hpp"
#include "snsga/driver.hpp"
#include "snsga/nsga.hpp"
#include "snsga/simplex.hpp"
#include "snsga/timetable.hpp"

using namespace snsga;

static void BM_RegularSimplex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> base(n, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(regular_simplex(base, 2.0));
}
BENCHMARK(BM_RegularSimplex)->Arg(2)->Arg(10)->Arg(50);

static void BM_NmIterate(benchmark::State& state) {
    const auto& spec = find_benchmark("R10");
    for (auto _ : state) {
        state.PauseTiming();
        EvalCounter counter;
        std::vector<Individual> vertices;
        for (auto& point : regular_simplex(std::vector<double>(10, 5.0), 2.0)) {
            Individual v;
            v.position = clip_to_bounds(std::move(point), spec.problem.bounds);
            v.objectives = evaluate_counted(spec.problem, v.position, counter);
            vertices.push_back(std::move(v));
        }
        auto simplex = Simplex::from_vertices(std::move(vertices));
        state.ResumeTiming();
        benchmark::DoNotOptimize(nm_iterate(std::move(simplex),
                                            SimplexCoefficients{}, spec.problem,
                                            counter, 30));
    }
}
BENCHMARK(BM_NmIterate);

static void BM_NondominatedSort(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> value(0, 1);
    Population pop;
    for (int i = 0; i < n; ++i) {
        Individual v;
        v.position = {0.0};
        v.objectives = {value(rng), value(rng)};
        pop.members.push_back(std::move(v));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(fast_nondominated_sort(pop));
}
BENCHMARK(BM_NondominatedSort)->Arg(30)->Arg(60)->Arg(200);

static void BM_TimetableDecode(benchmark::State& state) {
    const auto instance = timetable::demo_instance();
    const auto x = timetable::demo_encoding();
    for (auto _ : state)
        benchmark::DoNotOptimize(timetable::decode(instance, x));
}
BENCHMARK(BM_TimetableDecode);

static void BM_FullRunBranin(benchmark::State& state) {
    const auto& spec = find_benchmark("RC");
    SnsgaConfig config;
    config.max_generations = 10;
    for (auto _ : state) {
        config.rng_seed++;
        benchmark::DoNotOptimize(run(spec.problem, config));
    }
}
BENCHMARK(BM_FullRunBranin)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
