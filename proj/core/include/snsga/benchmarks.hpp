#pragma once

#include "snsga/problem.hpp"

namespace snsga {

/// A test problem plus its known global optimum.
struct BenchmarkSpec {
    ObjectiveProblem problem;
    double known_optimum_value;  // FOBJ_ANAL
    std::vector<std::vector<double>> known_optimum_points;
    std::string source_note;
    /// Allowed |f(optimum point) - known value|; loosened where the
    /// minimizer itself is only quoted to finite precision.
    double optimum_tolerance = 1e-6;
};

/// A benchmark's value at a stored optimum drifted past its tolerance.
struct RegistryIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ten standard test problems: RC, GP, B2, SH, R2, Z2, H34, S45,
/// R5, R10.
const std::vector<BenchmarkSpec>& registry();

const BenchmarkSpec& find_benchmark(const std::string& name);

struct RegistryDeviation {
    std::string name;
    double max_deviation;
};

/// Evaluates every spec at every stored optimum point. Throws
/// RegistryIntegrityError naming the first benchmark whose deviation
/// exceeds its tolerance.
std::vector<RegistryDeviation> verify_specs(const std::vector<BenchmarkSpec>& specs);
std::vector<RegistryDeviation> verify_registry();

}  // namespace snsga
