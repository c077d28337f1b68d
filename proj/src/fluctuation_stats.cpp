#include "gcfluct/fluctuation_stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gcfluct/errors.hpp"

namespace gcfluct {

namespace {

AverageResult checked(AverageResult r) {
    if (!std::isfinite(r.value) || !std::isfinite(r.std_error)) {
        throw DomainError("average: non-finite partial sums (divergent integrand?)");
    }
    return r;
}

void require_grid_size(int points, std::size_t dims) {
    const double nodes = std::pow(static_cast<double>(points), static_cast<double>(dims));
    if (nodes > kMaxGridNodes) {
        std::ostringstream os;
        os << "tensor grid with " << points << "^" << dims << " nodes exceeds " << kMaxGridNodes
           << "; lower the point count or use monte-carlo";
        throw DomainError(os.str());
    }
}

}  // namespace

void ThermoState::validate() const {
    if (!(T > 0.0)) throw DomainError("ThermoState: T must be > 0");
    if (!(V > 0.0)) throw DomainError("ThermoState: V must be > 0");
    if (!(k_B > 0.0)) throw DomainError("ThermoState: k_B must be > 0");
    if (!(C_V > 0.0)) throw DomainError("ThermoState: thermodynamic inequality C_V > 0 violated");
    if (!(dPdV_T < 0.0)) {
        throw DomainError("ThermoState: thermodynamic inequality (dP/dV)_T < 0 violated");
    }
}

void IdealGasRefs::validate() const {
    if (!(S0 > 0.0 && P0 > 0.0 && V0 > 0.0 && T0 > 0.0)) {
        throw DomainError("IdealGasRefs: reference values must be > 0");
    }
}

void FluctuationMetric::validate() const {
    if (!(g_TT > 0.0 && g_VV > 0.0)) {
        throw DomainError("FluctuationMetric: coefficients must be > 0");
    }
}

void QuadratureSpec::validate() const {
    if (points < 2) throw std::invalid_argument("QuadratureSpec: points must be >= 2");
    if (!(truncation > 0.0)) throw std::invalid_argument("QuadratureSpec: truncation must be > 0");
    if (scheme == QuadratureScheme::MonteCarlo && samples < 2) {
        throw std::invalid_argument("QuadratureSpec: samples must be >= 2");
    }
}

double gaussian_fluct_log_prob_tv(const ThermoState& state, double dT, double dV) {
    const FluctuationMetric g = fluctuation_metric(state);
    return -(g.g_TT * dT * dT + g.g_VV * dV * dV);
}

double gaussian_fluct_prob_tv(const ThermoState& state, double dT, double dV) {
    return std::exp(gaussian_fluct_log_prob_tv(state, dT, dV));
}

FluctuationMetric fluctuation_metric(const ThermoState& state) {
    state.validate();
    return {state.C_V / (2.0 * state.k_B * state.T * state.T),
            -state.dPdV_T / (2.0 * state.k_B * state.T)};
}

AverageResult riemann_average(const std::function<double(double, double)>& f,
                              const FluctuationMetric& metric, const QuadratureSpec& quad) {
    metric.validate();
    quad.validate();
    const double sigma_t = 1.0 / std::sqrt(2.0 * metric.g_TT);
    const double sigma_v = 1.0 / std::sqrt(2.0 * metric.g_VV);
    const PointFunction fx = [&](std::span<const double> x) { return f(x[0], x[1]); };

    if (quad.scheme == QuadratureScheme::MonteCarlo) {
        const PointSampler sampler = [&](std::mt19937_64& gen, std::span<double> x) {
            std::normal_distribution<double> nd;
            x[0] = sigma_t * nd(gen);
            x[1] = sigma_v * nd(gen);
        };
        const auto mc = monte_carlo_mean(2, sampler, fx, quad.samples, quad.seed, quad.execution);
        return checked({mc.mean, mc.std_error});
    }

    require_grid_size(quad.points, 2);
    const double wt = quad.truncation * sigma_t;
    const double wv = quad.truncation * sigma_v;
    const std::vector<Rule1D> axes{trapezoid_rule(-wt, wt, quad.points),
                                   trapezoid_rule(-wv, wv, quad.points)};
    const PointFunction density = [&](std::span<const double> x) {
        return std::exp(-metric.g_TT * x[0] * x[0] - metric.g_VV * x[1] * x[1]);
    };
    return checked({tensor_grid_ratio(axes, density, fx, quad.execution).ratio(), 0.0});
}

DarbouxPoint to_darboux(double P, double V, double T, double S, const IdealGasRefs& refs) {
    refs.validate();
    if (!(P > 0.0 && V > 0.0 && T > 0.0 && S > 0.0)) {
        throw DomainError("to_darboux: P, V, T, S must be > 0");
    }
    return {-std::log(P / refs.P0), std::log(V / refs.V0), std::log(T / refs.T0), S / refs.S0};
}

DarbouxPoint darboux_deltas(const ThermoState& state, double dP, double dV, double dT, double dS,
                            const IdealGasRefs& refs) {
    const DarbouxPoint a = to_darboux(state.P, state.V, state.T, state.S, refs);
    const DarbouxPoint b =
        to_darboux(state.P + dP, state.V + dV, state.T + dT, state.S + dS, refs);
    return {b.p1 - a.p1, b.q1 - a.q1, b.p2 - a.p2, b.q2 - a.q2};
}

double fluct_prob_physical(const ThermoState& state, double dP, double dV, double dT, double dS,
                           const IdealGasRefs& refs) {
    refs.validate();
    if (!(state.P > 0.0 && state.V > 0.0 && state.T > 0.0 && state.k_B > 0.0)) {
        throw DomainError("fluct_prob_physical: P, V, T, k_B must be > 0");
    }
    const double pv = state.P * state.V;
    const double s0t = refs.S0 * state.T;
    if (std::abs(pv - s0t) > 1e-9 * std::max(std::abs(pv), std::abs(s0t))) {
        std::ostringstream os;
        os << "fluct_prob_physical: state violates PV = S0 T (PV=" << pv << ", S0 T=" << s0t
           << ")";
        throw DomainError(os.str());
    }
    const double q = -refs.S0 * dP * dV / pv + dT * dS / state.T;
    return std::exp(-q / (2.0 * state.k_B));
}

double fluct_prob_darboux(double dp1, double dq1, double dp2, double dq2, double S0, double k_B) {
    return std::exp(-(S0 / (2.0 * k_B)) * (dp1 * dq1 + dp2 * dq2));
}

double symplectic_area(std::span<const RectanglePatch> patches, int planes) {
    double area = 0.0;
    for (const auto& p : patches) {
        if (p.plane < 1 || p.plane > planes) {
            throw std::invalid_argument("symplectic_area: unknown plane tag " +
                                        std::to_string(p.plane));
        }
        if (p.orientation != 1 && p.orientation != -1) {
            throw std::invalid_argument("symplectic_area: orientation must be +1 or -1");
        }
        area += p.orientation * p.dp * p.dq;
    }
    return area;
}

double poisson_bracket(const PointFunction& f, const PointFunction& g,
                       const SymplecticForm& omega, std::span<const double> point, double step) {
    const auto dim = static_cast<std::size_t>(omega.matrix().rows());
    if (point.size() != dim) throw DimensionError("poisson_bracket: point dimension mismatch");
    if (step < 0.0) throw std::invalid_argument("poisson_bracket: step must be > 0");

    std::vector<double> x(point.begin(), point.end());
    Vector df(static_cast<Eigen::Index>(dim));
    Vector dg(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const double h = step > 0.0 ? step : 1e-5 * (1.0 + std::abs(point[i]));
        const double hi = point[i] + h;
        const double lo = point[i] - h;
        x[i] = hi;
        const double fp = f(x);
        const double gp = g(x);
        x[i] = lo;
        const double fm = f(x);
        const double gm = g(x);
        x[i] = point[i];
        // divide by the spacing actually sampled, not the nominal 2h
        df(static_cast<Eigen::Index>(i)) = (fp - fm) / (hi - lo);
        dg(static_cast<Eigen::Index>(i)) = (gp - gm) / (hi - lo);
    }
    return df.dot(omega.poisson() * dg);
}

Box Box::unit(int dim) {
    return {std::vector<double>(static_cast<std::size_t>(dim), 0.0),
            std::vector<double>(static_cast<std::size_t>(dim), 1.0)};
}

AverageResult symplectic_average(const PointFunction& f, const SymplecticForm& omega,
                                 const Box& domain, const QuadratureSpec& quad) {
    quad.validate();
    const auto dim = static_cast<std::size_t>(omega.matrix().rows());
    if (domain.lo.size() != dim || domain.hi.size() != dim) {
        throw DimensionError("symplectic_average: box dimension does not match omega");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (!std::isfinite(domain.lo[i]) || !std::isfinite(domain.hi[i]) ||
            !(domain.hi[i] > domain.lo[i])) {
            throw DomainError("symplectic_average: domain must be a bounded nonempty box");
        }
    }
    // omega^n / n! = Pf(omega) dx^1 ... dx^2n, and |Pf| = sqrt|det|.
    const double liouville = std::sqrt(std::abs(omega.matrix().determinant()));

    if (quad.scheme == QuadratureScheme::MonteCarlo) {
        const PointSampler sampler = [&](std::mt19937_64& gen, std::span<double> x) {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = domain.lo[i] + (domain.hi[i] - domain.lo[i]) * u(gen);
            }
        };
        const auto mc = monte_carlo_mean(static_cast<int>(dim), sampler, f, quad.samples,
                                         quad.seed, quad.execution);
        return checked({mc.mean, mc.std_error});
    }

    require_grid_size(quad.points, dim);
    std::vector<Rule1D> axes;
    for (std::size_t i = 0; i < dim; ++i) {
        axes.push_back(simpson_rule(domain.lo[i], domain.hi[i], quad.points));
    }
    const PointFunction density = [liouville](std::span<const double>) { return liouville; };
    return checked({tensor_grid_ratio(axes, density, f, quad.execution).ratio(), 0.0});
}

AverageResult hermitian_average(const ComplexFunction& f, const Eigen::MatrixXcd& h,
                                const QuadratureSpec& quad) {
    quad.validate();
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw DimensionError("hermitian_average: h must be a nonempty square matrix");
    }
    const double scale = h.cwiseAbs().maxCoeff();
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw DomainError("hermitian_average: h is not Hermitian");
    }
    Eigen::LLT<Eigen::MatrixXcd> llt(h);
    if (llt.info() != Eigen::Success) {
        throw DomainError("hermitian_average: h is not positive definite");
    }
    // conj(z)^T h z = |L^* z|^2; integrate over w = L^* z, z = L^{-*} w.
    const Eigen::MatrixXcd back =
        llt.matrixU().solve(Eigen::MatrixXcd::Identity(h.rows(), h.cols()));
    const auto n = static_cast<std::size_t>(h.rows());

    const PointFunction fw = [&](std::span<const double> x) {
        Eigen::VectorXcd w(static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < n; ++k) {
            w(static_cast<Eigen::Index>(k)) = {x[2 * k], x[2 * k + 1]};
        }
        const Eigen::VectorXcd z = back * w;
        return f(std::span<const std::complex<double>>(z.data(), n));
    };

    // Each real component of w has weight exp(-x^2), sigma = 1/sqrt(2).
    const double sigma = 1.0 / std::sqrt(2.0);
    if (quad.scheme == QuadratureScheme::MonteCarlo) {
        const PointSampler sampler = [sigma](std::mt19937_64& gen, std::span<double> x) {
            std::normal_distribution<double> nd;
            for (auto& v : x) v = sigma * nd(gen);
        };
        const auto mc = monte_carlo_mean(static_cast<int>(2 * n), sampler, fw, quad.samples,
                                         quad.seed, quad.execution);
        return checked({mc.mean, mc.std_error});
    }

    require_grid_size(quad.points, 2 * n);
    const double width = quad.truncation * sigma;
    const std::vector<Rule1D> axes(2 * n, trapezoid_rule(-width, width, quad.points));
    const PointFunction density = [](std::span<const double> x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return std::exp(-r2);
    };
    return checked({tensor_grid_ratio(axes, density, fw, quad.execution).ratio(), 0.0});
}

}  // namespace gcfluct
