#include "snsga/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace snsga {

namespace {

constexpr double kPi = std::numbers::pi;

double branin(const std::vector<double>& x) {
    const double a = 1.0, b = 5.1 / (4.0 * kPi * kPi), c = 5.0 / kPi;
    const double r = 6.0, s = 10.0, t = 1.0 / (8.0 * kPi);
    const double u = x[1] - b * x[0] * x[0] + c * x[0] - r;
    return a * u * u + s * (1.0 - t) * std::cos(x[0]) + s;
}

double goldstein_price(const std::vector<double>& x) {
    const double x1 = x[0], x2 = x[1];
    const double p = 1.0 + (x1 + x2 + 1.0) * (x1 + x2 + 1.0) *
                               (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double q = 30.0 + (2.0 * x1 - 3.0 * x2) * (2.0 * x1 - 3.0 * x2) *
                                (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                 36.0 * x1 * x2 + 27.0 * x2 * x2);
    return p * q;
}

double b2(const std::vector<double>& x) {
    return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * kPi * x[0]) -
           0.4 * std::cos(4.0 * kPi * x[1]) + 0.7;
}

double shubert(const std::vector<double>& x) {
    double product = 1.0;
    for (double xi : x) {
        double sum = 0.0;
        for (int j = 1; j <= 5; ++j) sum += j * std::cos((j + 1.0) * xi + j);
        product *= sum;
    }
    return product;
}

double rosenbrock(const std::vector<double>& x) {
    double f = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double d = x[i + 1] - x[i] * x[i];
        f += 100.0 * d * d + (x[i] - 1.0) * (x[i] - 1.0);
    }
    return f;
}

double zakharov(const std::vector<double>& x) {
    double sq = 0.0, lin = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sq += x[i] * x[i];
        lin += 0.5 * (i + 1.0) * x[i];
    }
    return sq + lin * lin + lin * lin * lin * lin;
}

double hartmann34(const std::vector<double>& x) {
    static const double A[4][3] = {
        {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
    static const double c[4] = {1.0, 1.2, 3.0, 3.2};
    static const double P[4][3] = {{0.3689, 0.1170, 0.2673},
                                   {0.4699, 0.4387, 0.7470},
                                   {0.1091, 0.8732, 0.5547},
                                   {0.03815, 0.5743, 0.8828}};
    double f = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double d = x[j] - P[i][j];
            e += A[i][j] * d * d;
        }
        f -= c[i] * std::exp(-e);
    }
    return f;
}

double shekel45(const std::vector<double>& x) {
    static const double a[5][4] = {{4, 4, 4, 4},
                                   {1, 1, 1, 1},
                                   {8, 8, 8, 8},
                                   {6, 6, 6, 6},
                                   {3, 7, 3, 7}};
    static const double c[5] = {0.1, 0.2, 0.2, 0.4, 0.4};
    double f = 0.0;
    for (int j = 0; j < 5; ++j) {
        double d = c[j];
        for (int i = 0; i < 4; ++i) d += (x[i] - a[j][i]) * (x[i] - a[j][i]);
        f -= 1.0 / d;
    }
    return f;
}

Bounds cube(int n, double low, double high) {
    return Bounds(n, Interval{low, high});
}

std::vector<BenchmarkSpec> build_registry() {
    std::vector<BenchmarkSpec> specs;

    specs.push_back({make_scalar_problem("RC", {{-5, 10}, {0, 15}}, branin),
                     0.39788735772973816,
                     {{kPi, 2.275}, {-kPi, 12.275}, {9.42477796, 2.475}},
                     "Branin RCOS; bounds [-5,10]x[0,15]; three global minimizers"});

    specs.push_back({make_scalar_problem("GP", cube(2, -2, 2), goldstein_price),
                     3.0,
                     {{0.0, -1.0}},
                     "Goldstein-Price; bounds [-2,2]^2; minimum 3 at (0,-1)"});

    specs.push_back({make_scalar_problem("B2", cube(2, -100, 100), b2),
                     0.0,
                     {{0.0, 0.0}},
                     "B2 (quadratic with cosine ripples); bounds [-100,100]^2"});

    specs.push_back({make_scalar_problem("SH", cube(2, -10, 10), shubert),
                     -186.7309088310239,
                     {{-1.42512843, -0.80032110}},
                     "Shubert; bounds [-10,10]^2; 18 global minimizers, one stored"});

    specs.push_back({make_scalar_problem("R2", cube(2, -5, 10), rosenbrock),
                     0.0,
                     {{1.0, 1.0}},
                     "Rosenbrock n=2; bounds [-5,10]^2; minimum 0 at (1,1)"});

    specs.push_back({make_scalar_problem("Z2", cube(2, -5, 10), zakharov),
                     0.0,
                     {{0.0, 0.0}},
                     "Zakharov n=2; bounds [-5,10]^2; minimum 0 at origin"});

    specs.push_back({make_scalar_problem("H34", cube(3, 0, 1), hartmann34),
                     -3.8627821478207554,
                     {{0.11461433, 0.55564885, 0.85254695}},
                     "Hartmann 3-D, 4 terms; bounds [0,1]^3"});

    BenchmarkSpec shekel{make_scalar_problem("S45", cube(4, 0, 10), shekel45),
                         -10.153199679058229,
                         {{4.00003715, 4.00013328, 4.00003715, 4.00013328}},
                         "Shekel 4-D, 5 terms; bounds [0,10]^4; minimizer quoted "
                         "to finite precision",
                         1e-4};
    specs.push_back(std::move(shekel));

    specs.push_back({make_scalar_problem("R5", cube(5, -5, 10), rosenbrock),
                     0.0,
                     {std::vector<double>(5, 1.0)},
                     "Rosenbrock n=5; bounds [-5,10]^5; minimum 0 at all-ones"});

    specs.push_back({make_scalar_problem("R10", cube(10, -5, 10), rosenbrock),
                     0.0,
                     {std::vector<double>(10, 1.0)},
                     "Rosenbrock n=10; bounds [-5,10]^10; minimum 0 at all-ones"});

    return specs;
}

}  // namespace

const std::vector<BenchmarkSpec>& registry() {
    static const std::vector<BenchmarkSpec> specs = build_registry();
    return specs;
}

const BenchmarkSpec& find_benchmark(const std::string& name) {
    for (const auto& spec : registry())
        if (spec.problem.name == name) return spec;
    throw LookupError("unknown benchmark: " + name);
}

std::vector<RegistryDeviation> verify_specs(const std::vector<BenchmarkSpec>& specs) {
    std::vector<RegistryDeviation> deviations;
    for (const auto& spec : specs) {
        double worst = 0.0;
        for (const auto& point : spec.known_optimum_points) {
            if (!within_bounds(point, spec.problem.bounds))
                throw RegistryIntegrityError(spec.problem.name +
                                             ": optimum point out of bounds");
            const double value = spec.problem.evaluate(point).front();
            worst = std::max(worst, std::abs(value - spec.known_optimum_value));
        }
        if (worst > spec.optimum_tolerance)
            throw RegistryIntegrityError(spec.problem.name +
                                         ": optimum value deviation " +
                                         std::to_string(worst) + " above tolerance");
        deviations.push_back({spec.problem.name, worst});
    }
    return deviations;
}

std::vector<RegistryDeviation> verify_registry() { return verify_specs(registry()); }

}  // namespace snsga
