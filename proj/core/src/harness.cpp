#include "snsga/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace snsga::harness {

bool is_success(double fobj_alg, double fobj_anal, double fobj_init) {
    return std::abs(fobj_alg - fobj_anal) < 1e-4 * std::abs(fobj_init) + 1e-6;
}

std::vector<double> normalize_trace(const std::vector<double>& trace) {
    if (trace.empty()) throw StructuralError("normalize_trace: empty trace");
    const auto [lo_it, hi_it] = std::minmax_element(trace.begin(), trace.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(trace.size(), 0.0);
    if (hi > lo)
        for (std::size_t i = 0; i < trace.size(); ++i)
            out[i] = (trace[i] - lo) / (hi - lo);
    return out;
}

BenchmarkReport make_report(const std::string& benchmark,
                            const std::vector<TrialOutcome>& trials) {
    BenchmarkReport report;
    report.benchmark = benchmark;
    double eval_sum = 0.0, gap_sum = 0.0;
    for (const auto& trial : trials) {
        if (trial.benchmark != benchmark) continue;
        ++report.trials;
        if (trial.success) {
            ++report.successes;
            eval_sum += static_cast<double>(trial.evaluations);
            gap_sum += trial.gap;
        }
    }
    if (report.trials > 0)
        report.success_rate = 100.0 * report.successes / report.trials;
    if (report.successes > 0) {
        report.mean_evaluations_successful = eval_sum / report.successes;
        report.mean_gap_successful = gap_sum / report.successes;
    }
    return report;
}

CampaignResult run_campaign(const std::vector<std::string>& names, int trials,
                            const SnsgaConfig& config, std::uint64_t base_seed) {
    if (trials < 1) throw StructuralError("run_campaign: trials must be >= 1");
    CampaignResult result;
    for (const auto& name : names) {
        const BenchmarkSpec& spec = find_benchmark(name);
        for (int i = 0; i < trials; ++i) {
            SnsgaConfig trial_config = config;
            trial_config.rng_seed = base_seed + static_cast<std::uint64_t>(i);
            trial_config.target_objective = spec.known_optimum_value;

            TrialOutcome outcome;
            outcome.benchmark = name;
            outcome.seed = trial_config.rng_seed;
            try {
                outcome.run_result = run(spec.problem, trial_config);
                outcome.evaluations = outcome.run_result.evaluations_used;
                outcome.gap = std::abs(outcome.run_result.best_objective -
                                       spec.known_optimum_value);
                outcome.success =
                    is_success(outcome.run_result.best_objective,
                               spec.known_optimum_value,
                               outcome.run_result.initial_mean_objective);
            } catch (const NumericalFailure&) {
                outcome.success = false;
            }
            result.trials.push_back(std::move(outcome));
        }

        BenchmarkReport report = make_report(name, result.trials);
        // One reference run without the success stop, same base seed.
        SnsgaConfig full_config = config;
        full_config.rng_seed = base_seed;
        full_config.target_objective.reset();
        report.full_run_evaluations = run(spec.problem, full_config).evaluations_used;
        result.reports.push_back(std::move(report));
    }
    return result;
}

namespace {

ReferenceTable build_reference_table() {
    ReferenceTable table;
    table.algorithms = {"CHA",      "ECTS",     "CGA",   "ESA",   "CRTS min",
                        "CRTS ave", "TS",       "INTEROPT", "NM-GA", "NM-PSO",
                        "SNSGA"};
    auto row = [&](const std::string& algo,
                   std::initializer_list<std::pair<const char*, double>> cells) {
        for (const auto& [bench, value] : cells) table.evaluations[algo][bench] = value;
    };
    row("CHA", {{"RC", 295}, {"GP", 259}, {"B2", 132}, {"SH", 345},
                {"R2", 459}, {"Z2", 215}, {"H34", 492}, {"S45", 598}});
    row("ECTS", {{"RC", 245}, {"GP", 231}, {"B2", 210}, {"SH", 370},
                 {"R2", 480}, {"Z2", 195}, {"H34", 548}, {"S45", 825}});
    row("CGA", {{"RC", 620}, {"GP", 410}, {"B2", 320}, {"SH", 575},
                {"R2", 960}, {"Z2", 620}, {"H34", 582}, {"S45", 610}});
    row("ESA", {{"GP", 783}, {"R2", 796}, {"Z2", 15820}, {"H34", 698}, {"S45", 1137}});
    row("CRTS min", {{"RC", 41}, {"GP", 171}, {"H34", 609}, {"S45", 664}});
    row("CRTS ave", {{"RC", 38}, {"GP", 248}, {"H34", 513}, {"S45", 812}});
    row("TS", {{"RC", 492}, {"GP", 486}, {"SH", 727}, {"H34", 508}});
    row("INTEROPT", {{"RC", 4172}, {"GP", 6375}, {"H34", 1113}, {"S45", 3700}});
    row("NM-GA", {{"RC", 356}, {"GP", 422}, {"B2", 529}, {"SH", 1009},
                  {"R2", 738}, {"Z2", 339}, {"H34", 688}, {"S45", 2366}});
    row("NM-PSO", {{"RC", 230}, {"GP", 304}, {"B2", 325}, {"SH", 753},
                   {"R2", 440}, {"Z2", 186}, {"H34", 436}, {"S45", 850}});
    row("SNSGA", {{"RC", 109}, {"GP", 124}, {"B2", 94}, {"SH", 206},
                  {"R2", 189}, {"Z2", 227}, {"H34", 185}, {"S45", 345}});
    return table;
}

}  // namespace

std::optional<double> ReferenceTable::lookup(const std::string& algorithm,
                                             const std::string& benchmark) const {
    auto algo_it = evaluations.find(algorithm);
    if (algo_it == evaluations.end()) return std::nullopt;
    auto bench_it = algo_it->second.find(benchmark);
    if (bench_it == algo_it->second.end()) return std::nullopt;
    return bench_it->second;
}

const ReferenceTable& reference_table() {
    static const ReferenceTable table = build_reference_table();
    return table;
}

const std::map<std::string, PublishedClaim>& published_claims() {
    static const std::map<std::string, PublishedClaim> claims = {
        {"RC", {100, 109, 1e-6}},  {"GP", {100, 124, 8e-5}},
        {"B2", {100, 94, 1e-6}},   {"SH", {100, 206, 5.5e-5}},
        {"R2", {100, 189, 4e-6}},  {"Z2", {100, 227, 5e-6}},
        {"H34", {100, 185, 1.35e-4}}, {"S45", {98, 345, 7e-5}},
        {"R5", {100, 105, 3e-5}},  {"R10", {100, 148, 9e-5}},
    };
    return claims;
}

std::vector<ComparisonRow> compare_reference(const BenchmarkReport& report) {
    if (!published_claims().count(report.benchmark))
        throw LookupError("no published claim for benchmark: " + report.benchmark);
    const ReferenceTable& table = reference_table();
    std::vector<ComparisonRow> rows;
    for (const auto& algo : table.algorithms)
        rows.push_back({algo, table.lookup(algo, report.benchmark)});
    // SNSGA claim appears in Table 2 even where Table 3 omits the column.
    if (!rows.back().evaluations)
        rows.back().evaluations = published_claims().at(report.benchmark).evaluations;
    rows.push_back({"SNSGA (measured)", report.mean_evaluations_successful});
    return rows;
}

// --- persistence -----------------------------------------------------

namespace {

nlohmann::json to_json(const RunResult& result) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& record : result.trace)
        trace.push_back({{"generation", record.generation},
                         {"best_objective", record.best_objective},
                         {"evaluations", record.evaluations}});
    return {{"best_point", result.best_point},
            {"best_objective", result.best_objective},
            {"evaluations_used", result.evaluations_used},
            {"generations_used", result.generations_used},
            {"initial_mean_objective", result.initial_mean_objective},
            {"stop_reason", static_cast<int>(result.stop_reason)},
            {"trace", std::move(trace)}};
}

RunResult run_result_from_json(const nlohmann::json& j) {
    RunResult result;
    result.best_point = j.at("best_point").get<std::vector<double>>();
    result.best_objective = j.at("best_objective").get<double>();
    result.evaluations_used = j.at("evaluations_used").get<long long>();
    result.generations_used = j.at("generations_used").get<int>();
    result.initial_mean_objective = j.at("initial_mean_objective").get<double>();
    result.stop_reason = static_cast<StopReason>(j.at("stop_reason").get<int>());
    for (const auto& record : j.at("trace"))
        result.trace.push_back({record.at("generation").get<int>(),
                                record.at("best_objective").get<double>(),
                                record.at("evaluations").get<long long>()});
    return result;
}

}  // namespace

void write_trials_jsonl(const std::filesystem::path& path,
                        const std::vector<TrialOutcome>& trials) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& trial : trials) {
        nlohmann::json j = {{"benchmark", trial.benchmark},
                            {"seed", trial.seed},
                            {"success", trial.success},
                            {"evaluations", trial.evaluations},
                            {"gap", trial.gap},
                            {"run_result", to_json(trial.run_result)}};
        out << j.dump() << '\n';
    }
}

std::vector<TrialOutcome> read_trials_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<TrialOutcome> trials;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        TrialOutcome trial;
        trial.benchmark = j.at("benchmark").get<std::string>();
        trial.seed = j.at("seed").get<std::uint64_t>();
        trial.success = j.at("success").get<bool>();
        trial.evaluations = j.at("evaluations").get<long long>();
        trial.gap = j.at("gap").get<double>();
        trial.run_result = run_result_from_json(j.at("run_result"));
        trials.push_back(std::move(trial));
    }
    return trials;
}

void write_reports_csv(const std::filesystem::path& path,
                       const std::vector<BenchmarkReport>& reports) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "benchmark,trials,successes,success_rate,"
           "mean_evaluations_successful,mean_gap_successful,full_run_evaluations\n";
    for (const auto& r : reports) {
        out << r.benchmark << ',' << r.trials << ',' << r.successes << ','
            << r.success_rate << ',';
        if (r.mean_evaluations_successful) out << *r.mean_evaluations_successful;
        out << ',';
        if (r.mean_gap_successful) out << *r.mean_gap_successful;
        out << ',';
        if (r.full_run_evaluations) out << *r.full_run_evaluations;
        out << '\n';
    }
}

void write_comparison_csv(const std::filesystem::path& path,
                          const std::string& benchmark,
                          const std::vector<ComparisonRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "benchmark,algorithm,mean_evaluations\n";
    for (const auto& row : rows) {
        out << benchmark << ',' << row.algorithm << ',';
        if (row.evaluations) out << *row.evaluations;
        out << '\n';
    }
}

void write_series_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<double, double>>& series,
                      const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << header << '\n';
    for (const auto& [a, b] : series) out << a << ',' << b << '\n';
}

SnsgaConfig parse_config(std::istream& in, const std::string& source_name) {
    SnsgaConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                     ": expected KEY=VALUE, got '" + line + "'");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "population_size") config.population_size = std::stoi(value);
            else if (key == "max_generations") config.max_generations = std::stoi(value);
            else if (key == "crossover_ratio") config.crossover_ratio = std::stod(value);
            else if (key == "mutation_scale") config.mutation_scale = std::stod(value);
            else if (key == "mutation_shrink") config.mutation_shrink = std::stod(value);
            else if (key == "simplex_side") config.simplex_side = std::stod(value);
            else if (key == "reflection") config.reflection = std::stod(value);
            else if (key == "expansion") config.expansion = std::stod(value);
            else if (key == "contraction") config.contraction = std::stod(value);
            else if (key == "simplex_max_iters") config.simplex_max_iters = std::stoi(value);
            else if (key == "init_simplex_iters") config.init_simplex_iters = std::stoi(value);
            else if (key == "exploration_simplexes") config.exploration_simplexes = std::stoi(value);
            else if (key == "rng_seed") config.rng_seed = std::stoull(value);
            else if (key == "eval_budget") config.eval_budget = std::stoll(value);
            else if (key == "target_objective") config.target_objective = std::stod(value);
            else
                throw std::runtime_error("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                     ": bad value for '" + key + "'");
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(source_name + ":" + std::to_string(line_no) +
                                     ": " + e.what());
        }
    }
    config.validate();
    return config;
}

SnsgaConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    return parse_config(in, path.string());
}

}  // namespace snsga::harness
