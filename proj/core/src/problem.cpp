#include "snsga/problem.hpp"

#include <algorithm>
#include <cmath>

namespace snsga {

void ObjectiveProblem::validate() const {
    if (dimension < 1) throw StructuralError(name + ": dimension must be positive");
    if (objective_count < 1)
        throw StructuralError(name + ": objective_count must be positive");
    if (static_cast<int>(bounds.size()) != dimension)
        throw StructuralError(name + ": bounds size does not match dimension");
    for (const auto& b : bounds)
        if (!(b.low < b.high))
            throw StructuralError(name + ": bound interval must have low < high");
    if (!evaluate) throw StructuralError(name + ": missing evaluate function");
}

ObjectiveProblem make_scalar_problem(std::string name, Bounds bounds,
                                     std::function<double(const std::vector<double>&)> f) {
    ObjectiveProblem p;
    p.name = std::move(name);
    p.dimension = static_cast<int>(bounds.size());
    p.bounds = std::move(bounds);
    p.objective_count = 1;
    p.evaluate = [fn = std::move(f)](const std::vector<double>& x) {
        return std::vector<double>{fn(x)};
    };
    return p;
}

std::vector<double> clip_to_bounds(std::vector<double> point, const Bounds& bounds) {
    if (point.size() != bounds.size())
        throw StructuralError("clip_to_bounds: point/bounds length mismatch");
    for (std::size_t i = 0; i < point.size(); ++i)
        point[i] = std::clamp(point[i], bounds[i].low, bounds[i].high);
    return point;
}

bool within_bounds(const std::vector<double>& point, const Bounds& bounds) {
    if (point.size() != bounds.size()) return false;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i] < bounds[i].low || point[i] > bounds[i].high) return false;
    return true;
}

std::vector<double> evaluate_counted(const ObjectiveProblem& problem,
                                     const std::vector<double>& point,
                                     EvalCounter& counter) {
    if (static_cast<int>(point.size()) != problem.dimension)
        throw StructuralError(problem.name + ": point dimension mismatch");
    counter.require_budget();
    std::vector<double> values = problem.evaluate(point);
    counter.tick();
    for (double v : values)
        if (!std::isfinite(v))
            throw NumericalFailure(problem.name + ": non-finite objective value", point);
    return values;
}

}  // namespace snsga
