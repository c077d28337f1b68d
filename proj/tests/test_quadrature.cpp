#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gcfluct/quadrature.hpp"

using namespace gcfluct;

TEST_CASE("1-D rules integrate polynomials") {
    const Rule1D s = simpson_rule(0.0, 2.0, 10);
    CHECK(s.size() == 11);
    double cubic = 0.0, total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        cubic += s.weights[i] * std::pow(s.nodes[i], 3);
        total += s.weights[i];
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(cubic == doctest::Approx(4.0).epsilon(1e-14));

    const Rule1D t = trapezoid_rule(-1.0, 1.0, 3);
    CHECK(t.nodes == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(t.weights == std::vector<double>{0.5, 1.0, 0.5});

    CHECK_THROWS_AS(trapezoid_rule(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(simpson_rule(1.0, 0.0, 5), std::invalid_argument);
}

TEST_CASE("trapezoid rule on a truncated gaussian") {
    const double L = 8.0 / std::sqrt(2.0);
    const Rule1D r = trapezoid_rule(-L, L, 201);
    double sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * std::exp(-r.nodes[i] * r.nodes[i]);
    CHECK(std::abs(sum - std::sqrt(std::numbers::pi)) < 1e-13);
}

TEST_CASE("simpson_integral") {
    CHECK(simpson_integral([](double x) { return x * x; }, 0.0, 3.0, 16) ==
          doctest::Approx(9.0).epsilon(1e-15));
    CHECK_THROWS_AS(simpson_integral([](double x) { return x; }, 0.0, 1.0, 3),
                    std::invalid_argument);
}

TEST_CASE("serial and parallel tensor grids agree") {
    const std::vector<Rule1D> axes{simpson_rule(0.0, 1.0, 41), simpson_rule(-1.0, 2.0, 31),
                                   trapezoid_rule(0.0, 1.0, 25)};
    const PointFunction density = [](std::span<const double> x) {
        return std::exp(-x[0] * x[0] - 0.5 * x[1] * x[1]) * (1.0 + x[2]);
    };
    const PointFunction f = [](std::span<const double> x) { return x[0] * x[1] + std::sin(x[2]); };
    const RatioSums ser = tensor_grid_ratio(axes, density, f, Execution::Serial);
    const RatioSums par = tensor_grid_ratio(axes, density, f, Execution::Parallel);
    CHECK(std::abs(ser.numerator - par.numerator) <= 1e-12 * std::abs(ser.numerator));
    CHECK(std::abs(ser.denominator - par.denominator) <= 1e-12 * std::abs(ser.denominator));
    // parallel path is reproducible run to run
    const RatioSums again = tensor_grid_ratio(axes, density, f, Execution::Parallel);
    CHECK(again.numerator == par.numerator);
    CHECK(again.denominator == par.denominator);

    // separable oracle: product of 1-D sums
    const std::vector<Rule1D> box{simpson_rule(0.0, 1.0, 21), simpson_rule(0.0, 1.0, 21)};
    const RatioSums sep = tensor_grid_ratio(
        box, [](std::span<const double>) { return 1.0; },
        [](std::span<const double> x) { return x[0] * x[1]; });
    CHECK(sep.ratio() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("monte carlo serial and parallel are bit-identical") {
    const PointSampler uniform = [](std::mt19937_64& g, std::span<double> out) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (double& v : out) v = u(g);
    };
    const PointFunction f = [](std::span<const double> x) { return x[0] + x[1]; };
    // not a multiple of the chunk size
    const std::int64_t n = 3 * kMonteCarloChunk + 1234;
    const auto ser = monte_carlo_mean(2, uniform, f, n, 99, Execution::Serial);
    const auto par = monte_carlo_mean(2, uniform, f, n, 99, Execution::Parallel);
    CHECK(ser.mean == par.mean);
    CHECK(ser.std_error == par.std_error);
    CHECK(ser.samples == n);
    CHECK(std::abs(ser.mean - 1.0) < 4.0 * ser.std_error);
    // oracle standard error: sd of U1+U2 is sqrt(1/6)
    CHECK(ser.std_error == doctest::Approx(std::sqrt(1.0 / 6.0 / n)).epsilon(0.02));

    const auto other = monte_carlo_mean(2, uniform, f, n, 100, Execution::Serial);
    CHECK(other.mean != ser.mean);
}
