// Command-line front end: benchmark campaigns, convergence traces, and
// timetable solving.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "snsga/benchmarks.hpp"
#include "snsga/driver.hpp"
#include "snsga/harness.hpp"
#include "snsga/timetable.hpp"

namespace fs = std::filesystem;
using namespace snsga;

namespace {

fs::path default_out_dir() {
    if (const char* env = std::getenv("SNSGA_OUT_DIR")) return fs::path(env);
    return fs::path(".");
}

std::vector<std::string> resolve_suite(const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& spec : registry()) names.push_back(spec.problem.name);
        return names;
    }
    std::stringstream ss(suite);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        find_benchmark(name);  // throws LookupError on unknown names
        names.push_back(name);
    }
    if (names.empty()) throw LookupError("empty benchmark suite");
    return names;
}

int cmd_bench_list() {
    std::cout << std::left << std::setw(6) << "name" << std::setw(6) << "dim"
              << std::setw(26) << "bounds" << std::setw(16) << "optimum"
              << "source\n";
    for (const auto& spec : registry()) {
        std::ostringstream bounds;
        const auto& front = spec.problem.bounds.front();
        const bool uniform = std::all_of(
            spec.problem.bounds.begin(), spec.problem.bounds.end(),
            [&](const Interval& b) {
                return b.low == front.low && b.high == front.high;
            });
        if (uniform) {
            bounds << "[" << front.low << ", " << front.high << "]^"
                   << spec.problem.dimension;
        } else {
            for (std::size_t d = 0; d < spec.problem.bounds.size(); ++d) {
                const auto& b = spec.problem.bounds[d];
                bounds << (d ? "x[" : "[") << b.low << "," << b.high << "]";
            }
        }
        std::cout << std::left << std::setw(6) << spec.problem.name << std::setw(6)
                  << spec.problem.dimension << std::setw(26) << bounds.str()
                  << std::setw(16) << spec.known_optimum_value << spec.source_note
                  << "\n";
    }
    return 0;
}

int cmd_bench_run(const std::string& suite, int trials, std::uint64_t seed,
                  const std::string& config_file, fs::path out_dir) {
    const auto names = resolve_suite(suite);
    SnsgaConfig config =
        config_file.empty() ? SnsgaConfig{} : harness::load_config(config_file);
    fs::create_directories(out_dir);

    const auto campaign = harness::run_campaign(names, trials, config, seed);
    harness::write_trials_jsonl(out_dir / "trials.jsonl", campaign.trials);
    harness::write_reports_csv(out_dir / "reports.csv", campaign.reports);
    for (const auto& report : campaign.reports) {
        const auto rows = harness::compare_reference(report);
        harness::write_comparison_csv(
            out_dir / ("comparison_" + report.benchmark + ".csv"), report.benchmark,
            rows);
    }

    for (const auto& report : campaign.reports) {
        std::cout << report.benchmark << ": success " << report.success_rate
                  << "% over " << report.trials << " trials";
        if (report.mean_evaluations_successful)
            std::cout << ", mean evaluations " << *report.mean_evaluations_successful;
        std::cout << "\n";
    }
    std::cout << "wrote " << (out_dir / "trials.jsonl").string() << ", reports.csv, "
              << "comparison_<benchmark>.csv\n";
    return 0;
}

int cmd_trace(const std::string& benchmark, std::uint64_t seed,
              const std::string& out_file) {
    const BenchmarkSpec& spec = find_benchmark(benchmark);
    SnsgaConfig config;
    config.rng_seed = seed;
    const RunResult result = run(spec.problem, config);

    std::vector<double> objectives;
    for (const auto& record : result.trace) objectives.push_back(record.best_objective);
    const auto normalized = harness::normalize_trace(objectives);

    std::vector<std::pair<double, double>> series;
    for (std::size_t i = 0; i < normalized.size(); ++i)
        series.emplace_back(result.trace[i].generation, normalized[i]);
    if (const fs::path parent = fs::path(out_file).parent_path(); !parent.empty())
        fs::create_directories(parent);
    harness::write_series_csv(out_file, series, "generation,normalized_objective");
    std::cout << "wrote " << out_file << " (" << series.size() << " generations, best "
              << result.best_objective << ")\n";
    return 0;
}

void write_schedule_outputs(const timetable::TimetableInstance& instance,
                            const timetable::Schedule& schedule,
                            const fs::path& out_dir) {
    fs::create_directories(out_dir);
    {
        std::ofstream out(out_dir / "schedule.csv");
        out << "user,rig_type,rig,start,end\n";
        for (std::size_t k = 0; k < instance.requests.size(); ++k) {
            const auto& req = instance.requests[k];
            out << req.user << ',' << req.rig_type << ',';
            if (schedule.assignments[k]) {
                const int type = instance.rig_type_index(req.rig_type);
                const auto& a = *schedule.assignments[k];
                out << instance.rig_types[type].rigs[a.rig_index].id << ',' << a.start
                    << ',' << a.start + req.duration;
            } else {
                out << "unassigned,,";
            }
            out << '\n';
        }
    }
    std::vector<std::pair<double, double>> series;
    for (const auto& [slot, value] : timetable::objective_trace(instance, schedule))
        series.emplace_back(slot, value);
    harness::write_series_csv(out_dir / "objective_trace.csv", series, "slot,objective");
}

int cmd_schedule_solve(const std::string& instance_file, std::uint64_t seed,
                       fs::path out_dir) {
    const auto instance = timetable::load_instance(instance_file);
    const auto problem = timetable::encode(instance);
    SnsgaConfig config;
    config.rng_seed = seed;
    const RunResult result = run(problem, config);
    const auto schedule = timetable::decode(instance, result.best_point);
    write_schedule_outputs(instance, schedule, out_dir);
    std::cout << "best total objective " << result.best_objective << " in "
              << result.evaluations_used << " evaluations; wrote "
              << (out_dir / "schedule.csv").string() << " and objective_trace.csv\n";
    return 0;
}

int cmd_schedule_demo(fs::path out_dir) {
    const auto instance = timetable::demo_instance();
    const auto schedule = timetable::decode(instance, timetable::demo_encoding());
    write_schedule_outputs(instance, schedule, out_dir);
    std::cout << "slot objective trace:";
    for (const auto& [slot, value] : timetable::objective_trace(instance, schedule))
        std::cout << ' ' << value;
    std::cout << "\nwrote " << (out_dir / "schedule.csv").string()
              << " and objective_trace.csv\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SNSGA hybrid optimizer: benchmark harness and timetable solver"};
    app.require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "benchmark registry and campaigns");
    bench->require_subcommand(1);
    bench->add_subcommand("list", "print the benchmark registry");

    std::string suite = "all", config_file, benchmark_name, instance_file;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string out = default_out_dir().string();
    std::string trace_out = (default_out_dir() / "trace.csv").string();

    auto* bench_run = bench->add_subcommand("run", "run a seeded campaign");
    bench_run->add_option("--suite", suite, "comma-separated benchmark names or 'all'");
    bench_run->add_option("--trials", trials, "trials per benchmark");
    bench_run->add_option("--seed", seed, "base seed");
    bench_run->add_option("--config", config_file, "KEY=VALUE config file");
    bench_run->add_option("--out", out, "output directory");

    auto* trace = app.add_subcommand("trace", "normalized convergence trace of one run");
    trace->add_option("--benchmark", benchmark_name, "benchmark name")->required();
    trace->add_option("--seed", seed, "seed");
    trace->add_option("--out", trace_out, "output CSV file");

    auto* schedule = app.add_subcommand("schedule", "timetable scheduling");
    schedule->require_subcommand(1);
    auto* solve = schedule->add_subcommand("solve", "optimize an instance file");
    solve->add_option("--instance", instance_file, "JSON instance file")->required();
    solve->add_option("--seed", seed, "seed");
    solve->add_option("--out", out, "output directory");
    auto* demo = schedule->add_subcommand("demo", "run the built-in queue scenario");
    demo->add_option("--out", out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->got_subcommand("list")) return cmd_bench_list();
        if (bench_run->parsed())
            return cmd_bench_run(suite, trials, seed, config_file, out);
        if (trace->parsed()) return cmd_trace(benchmark_name, seed, trace_out);
        if (solve->parsed()) return cmd_schedule_solve(instance_file, seed, out);
        if (demo->parsed()) return cmd_schedule_demo(out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
