#pragma once

// Tensor-grid and Monte-Carlo kernels behind the average functionals.
//
// Each kernel exists twice: a plain serial reference and an OpenMP version.
// The parallel versions reduce into per-slice (grid) or per-chunk
// (Monte-Carlo) partial sums that are combined in index order, so their
// output does not depend on the thread count or schedule.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace gcfluct {

enum class Execution { Serial, Parallel };

/// Nodes and weights of a one-dimensional rule on [a, b].
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Composite trapezoid rule with `points` >= 2 nodes. Exponentially
/// accurate for integrands that decay smoothly to zero at both ends.
Rule1D trapezoid_rule(double a, double b, int points);
/// Composite Simpson rule; `points` is rounded up to the next odd number.
Rule1D simpson_rule(double a, double b, int points);

/// A function of a point in R^d.
using PointFunction = std::function<double(std::span<const double>)>;

struct RatioSums {
    double numerator = 0.0;    // sum w * rho * f
    double denominator = 0.0;  // sum w * rho

    double ratio() const { return numerator / denominator; }
};

/// Weighted sums of density * f and density over the tensor product grid
/// of `axes`. The slowest index is axis 0.
RatioSums tensor_grid_ratio(std::span<const Rule1D> axes, const PointFunction& density,
                            const PointFunction& f, Execution exec = Execution::Parallel);

/// Draws one point (written into the span) from a distribution.
using PointSampler = std::function<void(std::mt19937_64&, std::span<double>)>;

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

inline constexpr std::int64_t kMonteCarloChunk = 1 << 15;

/// Sample mean of f over `samples` draws. Draws are split into fixed-size
/// chunks; chunk c uses its own generator seeded with (seed, c), so the
/// serial and parallel paths give bit-identical results.
MonteCarloEstimate monte_carlo_mean(int dim, const PointSampler& sampler, const PointFunction& f,
                                    std::int64_t samples, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

/// Composite Simpson integral of a scalar function on [a, b] with an even
/// number of intervals (`steps` must be even and >= 2).
double simpson_integral(const std::function<double(double)>& f, double a, double b, int steps);

}  // namespace gcfluct
