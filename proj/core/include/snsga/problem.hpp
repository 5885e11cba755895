#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snsga {

/// Closed per-coordinate interval [low, high].
struct Interval {
    double low;
    double high;
};

using Bounds = std::vector<Interval>;

/// Malformed inputs: dimension mismatches, empty populations, invalid
/// coefficients. Programming errors, not run outcomes.
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An objective returned a non-finite value at an in-bounds point.
struct NumericalFailure : std::runtime_error {
    NumericalFailure(const std::string& msg, std::vector<double> where)
        : std::runtime_error(msg), point(std::move(where)) {}
    std::vector<double> point;
};

/// Raised when an evaluation would exceed the configured budget. The
/// counter is not incremented; callers treat this as a normal
/// termination signal, not an error.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lookup by a name not present in a registry or table.
struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-run evaluation tally with an optional hard budget. One counter
/// per run; never shared between concurrent runs.
class EvalCounter {
  public:
    EvalCounter() = default;
    explicit EvalCounter(std::optional<long long> budget) : budget_(budget) {}

    long long count() const { return count_; }
    std::optional<long long> budget() const { return budget_; }
    bool exhausted() const { return budget_ && count_ >= *budget_; }

    /// Called exactly once per objective evaluation, after the call.
    void tick() { ++count_; }

    /// Throws BudgetExhausted if no budget remains.
    void require_budget() const {
        if (exhausted())
            throw BudgetExhausted("evaluation budget of " +
                                  std::to_string(*budget_) + " exhausted");
    }

  private:
    long long count_ = 0;
    std::optional<long long> budget_;
};

/// A bounded real-vector minimization problem. Immutable once built;
/// safe to share across concurrent runs.
struct ObjectiveProblem {
    std::string name;
    int dimension = 0;
    Bounds bounds;
    int objective_count = 1;
    std::function<std::vector<double>(const std::vector<double>&)> evaluate;

    void validate() const;
};

/// Convenience for the common scalar case.
ObjectiveProblem make_scalar_problem(std::string name, Bounds bounds,
                                     std::function<double(const std::vector<double>&)> f);

/// Clamp each coordinate into its interval. Idempotent; identity on
/// in-bounds points.
std::vector<double> clip_to_bounds(std::vector<double> point, const Bounds& bounds);

bool within_bounds(const std::vector<double>& point, const Bounds& bounds);

/// Evaluate through the counter. Throws BudgetExhausted before the call
/// if the budget is spent, NumericalFailure if the objective comes back
/// non-finite.
std::vector<double> evaluate_counted(const ObjectiveProblem& problem,
                                     const std::vector<double>& point,
                                     EvalCounter& counter);

/// One candidate solution: position, cached objectives, and the
/// non-domination rank assigned by sorting.
struct Individual {
    std::vector<double> position;
    std::vector<double> objectives;  // empty until evaluated
    std::optional<int> rank;

    bool evaluated() const { return !objectives.empty(); }
    /// Scalar fitness: first objective.
    double fitness() const {
        if (!evaluated()) throw StructuralError("individual not evaluated");
        return objectives.front();
    }
};

struct Population {
    std::vector<Individual> members;
    int generation = 0;
};

}  // namespace snsga
