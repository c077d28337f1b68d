#include "gcfluct/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gcfluct/errors.hpp"

namespace gcfluct {

namespace {

void require_axes(std::span<const Rule1D> axes) {
    if (axes.empty()) throw DimensionError("tensor grid: need at least one axis");
    for (const auto& a : axes) {
        if (a.size() == 0 || a.nodes.size() != a.weights.size()) {
            throw DimensionError("tensor grid: malformed 1-D rule");
        }
    }
}

// Sums over the sub-grid spanned by axes[1..] with axis 0 fixed at index i0.
// Odometer order, last axis fastest.
RatioSums slice_sums(std::span<const Rule1D> axes, std::size_t i0, const PointFunction& density,
                     const PointFunction& f) {
    const std::size_t d = axes.size();
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> x(d);
    idx[0] = i0;
    x[0] = axes[0].nodes[i0];
    for (std::size_t k = 1; k < d; ++k) x[k] = axes[k].nodes[0];

    RatioSums s;
    while (true) {
        double w = axes[0].weights[i0];
        for (std::size_t k = 1; k < d; ++k) w *= axes[k].weights[idx[k]];
        const double rho = w * density(x);
        s.denominator += rho;
        s.numerator += rho * f(x);
        std::size_t k = d;
        while (k > 1) {
            --k;
            if (++idx[k] < axes[k].size()) {
                x[k] = axes[k].nodes[idx[k]];
                break;
            }
            idx[k] = 0;
            x[k] = axes[k].nodes[0];
            if (k == 1) return s;
        }
        if (d == 1) return s;
    }
}

MonteCarloEstimate finish(double sum, double sum_sq, std::int64_t n) {
    MonteCarloEstimate e;
    e.samples = n;
    e.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var = (sum_sq - sum * e.mean) / static_cast<double>(n - 1);
        e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
    return e;
}

struct ChunkSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

ChunkSums run_chunk(int dim, const PointSampler& sampler, const PointFunction& f,
                    std::int64_t begin, std::int64_t end, std::uint64_t seed, std::int64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 gen(seq);
    std::vector<double> x(static_cast<std::size_t>(dim));
    ChunkSums s;
    for (std::int64_t i = begin; i < end; ++i) {
        sampler(gen, x);
        const double v = f(x);
        s.sum += v;
        s.sum_sq += v * v;
    }
    return s;
}

}  // namespace

Rule1D trapezoid_rule(double a, double b, int points) {
    if (points < 2) throw std::invalid_argument("trapezoid_rule: need at least 2 points");
    if (!(b > a)) throw std::invalid_argument("trapezoid_rule: empty interval");
    Rule1D r;
    r.nodes.resize(static_cast<std::size_t>(points));
    r.weights.resize(static_cast<std::size_t>(points));
    const double h = (b - a) / (points - 1);
    for (int i = 0; i < points; ++i) {
        r.nodes[i] = a + h * i;
        r.weights[i] = (i == 0 || i == points - 1) ? 0.5 * h : h;
    }
    return r;
}

Rule1D simpson_rule(double a, double b, int points) {
    if (points < 2) throw std::invalid_argument("simpson_rule: need at least 2 points");
    if (!(b > a)) throw std::invalid_argument("simpson_rule: empty interval");
    if (points % 2 == 0) ++points;
    Rule1D r;
    r.nodes.resize(static_cast<std::size_t>(points));
    r.weights.resize(static_cast<std::size_t>(points));
    const double h = (b - a) / (points - 1);
    for (int i = 0; i < points; ++i) {
        r.nodes[i] = a + h * i;
        const double c = (i == 0 || i == points - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        r.weights[i] = c * h / 3.0;
    }
    return r;
}

RatioSums tensor_grid_ratio(std::span<const Rule1D> axes, const PointFunction& density,
                            const PointFunction& f, Execution exec) {
    require_axes(axes);
    const std::size_t outer = axes[0].size();

    if (exec == Execution::Serial) {
        // Reference path: one flat odometer and a single accumulator.
        const std::size_t d = axes.size();
        std::vector<std::size_t> idx(d, 0);
        std::vector<double> x(d);
        for (std::size_t k = 0; k < d; ++k) x[k] = axes[k].nodes[0];
        RatioSums total;
        while (true) {
            double w = 1.0;
            for (std::size_t k = 0; k < d; ++k) w *= axes[k].weights[idx[k]];
            const double rho = w * density(x);
            total.denominator += rho;
            total.numerator += rho * f(x);
            std::size_t k = d;
            while (true) {
                if (k == 0) return total;
                --k;
                if (++idx[k] < axes[k].size()) {
                    x[k] = axes[k].nodes[idx[k]];
                    break;
                }
                idx[k] = 0;
                x[k] = axes[k].nodes[0];
            }
        }
    }

    std::vector<RatioSums> partial(outer);
    const auto n_outer = static_cast<std::int64_t>(outer);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n_outer; ++i) {
        partial[static_cast<std::size_t>(i)] =
            slice_sums(axes, static_cast<std::size_t>(i), density, f);
    }
    RatioSums total;
    for (const auto& s : partial) {
        total.numerator += s.numerator;
        total.denominator += s.denominator;
    }
    return total;
}

MonteCarloEstimate monte_carlo_mean(int dim, const PointSampler& sampler, const PointFunction& f,
                                    std::int64_t samples, std::uint64_t seed, Execution exec) {
    if (samples < 2) throw std::invalid_argument("monte_carlo_mean: need at least 2 samples");
    if (dim < 1) throw DimensionError("monte_carlo_mean: dimension must be >= 1");
    const std::int64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
    std::vector<ChunkSums> partial(static_cast<std::size_t>(chunks));

    if (exec == Execution::Serial) {
        for (std::int64_t c = 0; c < chunks; ++c) {
            const std::int64_t begin = c * kMonteCarloChunk;
            const std::int64_t end = std::min(samples, begin + kMonteCarloChunk);
            partial[static_cast<std::size_t>(c)] = run_chunk(dim, sampler, f, begin, end, seed, c);
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < chunks; ++c) {
            const std::int64_t begin = c * kMonteCarloChunk;
            const std::int64_t end = std::min(samples, begin + kMonteCarloChunk);
            partial[static_cast<std::size_t>(c)] = run_chunk(dim, sampler, f, begin, end, seed, c);
        }
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& p : partial) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    return finish(sum, sum_sq, samples);
}

double simpson_integral(const std::function<double(double)>& f, double a, double b, int steps) {
    if (steps < 2 || steps % 2 != 0) {
        throw std::invalid_argument("simpson_integral: steps must be even and >= 2");
    }
    const double h = (b - a) / steps;
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < steps; ++i) {
        const double v = f(a + h * i);
        if (i % 2) odd += v;
        else even += v;
    }
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace gcfluct
