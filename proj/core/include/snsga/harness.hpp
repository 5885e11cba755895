#pragma once

#include <filesystem>
#include <map>

#include "snsga/benchmarks.hpp"
#include "snsga/driver.hpp"

namespace snsga::harness {

/// Success predicate: |fobj_alg - fobj_anal| < 1e-4 |fobj_init| + 1e-6.
bool is_success(double fobj_alg, double fobj_anal, double fobj_init);

/// Min-max normalization over the whole trace; constant traces map to
/// all zeros.
std::vector<double> normalize_trace(const std::vector<double>& trace);

struct TrialOutcome {
    std::string benchmark;
    std::uint64_t seed = 0;
    bool success = false;
    long long evaluations = 0;
    double gap = 0.0;  // |FOBJ_ALG - FOBJ_ANAL|
    RunResult run_result;
};

struct BenchmarkReport {
    std::string benchmark;
    int trials = 0;
    int successes = 0;
    double success_rate = 0.0;  // percent
    std::optional<double> mean_evaluations_successful;
    std::optional<double> mean_gap_successful;
    /// Evaluations of one reference run with no early stop, for
    /// comparing the cost of success-based stopping.
    std::optional<long long> full_run_evaluations;
};

/// Pure fold over the trial records for one benchmark.
BenchmarkReport make_report(const std::string& benchmark,
                            const std::vector<TrialOutcome>& trials);

struct CampaignResult {
    std::vector<BenchmarkReport> reports;
    std::vector<TrialOutcome> trials;
};

/// Runs `trials` seeded runs per benchmark (seed = base_seed + index),
/// each stopping at the first success. Individual numerical failures
/// are recorded as unsuccessful trials, not aborts.
CampaignResult run_campaign(const std::vector<std::string>& names, int trials,
                            const SnsgaConfig& config, std::uint64_t base_seed);

/// Published per-algorithm average evaluation counts, by benchmark.
/// Absent entries were not reported.
struct ReferenceTable {
    std::vector<std::string> algorithms;
    std::map<std::string, std::map<std::string, double>> evaluations;  // algo -> bench

    std::optional<double> lookup(const std::string& algorithm,
                                 const std::string& benchmark) const;
};

const ReferenceTable& reference_table();

/// Published SNSGA per-benchmark claims (success rate %, mean
/// evaluations, mean gap) for all ten benchmarks.
struct PublishedClaim {
    double success_rate;
    double evaluations;
    double gap;
};
const std::map<std::string, PublishedClaim>& published_claims();

struct ComparisonRow {
    std::string algorithm;
    std::optional<double> evaluations;
};

/// Our measurement next to every published number for the report's
/// benchmark. Reporting only, no pass/fail judgment.
std::vector<ComparisonRow> compare_reference(const BenchmarkReport& report);

// --- persistence -----------------------------------------------------

void write_trials_jsonl(const std::filesystem::path& path,
                        const std::vector<TrialOutcome>& trials);
std::vector<TrialOutcome> read_trials_jsonl(const std::filesystem::path& path);

void write_reports_csv(const std::filesystem::path& path,
                       const std::vector<BenchmarkReport>& reports);
void write_comparison_csv(const std::filesystem::path& path,
                          const std::string& benchmark,
                          const std::vector<ComparisonRow>& rows);
void write_series_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<double, double>>& series,
                      const std::string& header);

/// KEY=VALUE config file mirroring the SnsgaConfig field names; missing
/// keys keep the tuned defaults. Throws with line context on errors.
SnsgaConfig load_config(const std::filesystem::path& path);
SnsgaConfig parse_config(std::istream& in, const std::string& source_name);

}  // namespace snsga::harness
