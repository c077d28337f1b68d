#pragma once

// Gaussian thermodynamic fluctuations: the (T, V) fluctuation metric, the
// ideal-gas Darboux picture with its symplectic area, Poisson brackets and
// the Riemannian / symplectic / Hermitian average functionals.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gcfluct/gcs_linalg.hpp"
#include "gcfluct/quadrature.hpp"

namespace gcfluct {

/// Equilibrium data. Units are those of k_B (k_B = 1 by default).
struct ThermoState {
    double T = 1.0;
    double V = 1.0;
    double P = 1.0;
    double S = 1.0;
    double C_V = 1.0;
    double dPdV_T = -1.0;  // (dP/dV)_T
    double k_B = 1.0;

    /// Throws DomainError unless T > 0, V > 0, k_B > 0, C_V > 0 and
    /// (dP/dV)_T < 0.
    void validate() const;
};

struct IdealGasRefs {
    double S0 = 1.0;
    double P0 = 1.0;
    double V0 = 1.0;
    double T0 = 1.0;

    void validate() const;
};

struct FluctuationMetric {
    double g_TT = 0.0;
    double g_VV = 0.0;

    void validate() const;
};

struct DarbouxPoint {
    double p1 = 0.0;
    double q1 = 0.0;
    double p2 = 0.0;
    double q2 = 0.0;
};

enum class QuadratureScheme { TensorGrid, MonteCarlo };

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::TensorGrid;
    int points = 201;                  // per axis (tensor grid)
    std::int64_t samples = 1'000'000;  // Monte-Carlo draws
    double truncation = 8.0;           // half-width in Gaussian sigmas
    std::uint64_t seed = 42;
    Execution execution = Execution::Parallel;

    void validate() const;
};

/// Value of an average functional. std_error is zero for grid quadrature.
struct AverageResult {
    double value = 0.0;
    double std_error = 0.0;
};

/// Upper bound on tensor-grid nodes accepted by the average functionals.
inline constexpr double kMaxGridNodes = 5e7;

/// W / W0 = exp[-C_V dT^2 / (2 k_B T^2) + (dP/dV)_T dV^2 / (2 k_B T)].
double gaussian_fluct_prob_tv(const ThermoState& state, double dT, double dV);
/// ln(W / W0); bitwise equal to -(g_TT dT^2 + g_VV dV^2) with g from
/// fluctuation_metric.
double gaussian_fluct_log_prob_tv(const ThermoState& state, double dT, double dV);

/// g_TT = C_V / (2 k_B T^2), g_VV = -(dP/dV)_T / (2 k_B T).
FluctuationMetric fluctuation_metric(const ThermoState& state);

/// <f> with weight exp(-g_TT T^2 - g_VV V^2); T and V are the fluctuations
/// about equilibrium and the coefficients are frozen at the equilibrium
/// point, so sqrt(g) cancels between numerator and normalisation.
AverageResult riemann_average(const std::function<double(double, double)>& f,
                              const FluctuationMetric& metric, const QuadratureSpec& quad);

/// (-ln(P/P0), ln(V/V0), ln(T/T0), S/S0)
DarbouxPoint to_darboux(double P, double V, double T, double S, const IdealGasRefs& refs);

/// Darboux increments induced by a physical fluctuation about `state`.
DarbouxPoint darboux_deltas(const ThermoState& state, double dP, double dV, double dT, double dS,
                            const IdealGasRefs& refs);

/// Ideal gas PV = S0 T:
/// W / W0 = exp[-(1/2k_B)(-S0 dP dV / (P V) + dT dS / T)].
double fluct_prob_physical(const ThermoState& state, double dP, double dV, double dT, double dS,
                           const IdealGasRefs& refs);

/// W / W0 = exp[-(S0 / 2k_B)(dp1 dq1 + dp2 dq2)].
double fluct_prob_darboux(double dp1, double dq1, double dp2, double dq2, double S0,
                          double k_B = 1.0);

/// Oriented coordinate rectangle in one Darboux plane (p_i, q_i).
struct RectanglePatch {
    int plane = 1;  // 1-based plane index
    double dp = 0.0;
    double dq = 0.0;
    int orientation = 1;  // +1 or -1
};

/// Integral of sum_i dp_i ^ dq_i over a disjoint union of rectangles.
double symplectic_area(std::span<const RectanglePatch> patches, int planes = 2);

/// {f, g} = pi^{jk} d_j f d_k g, pi = omega^{-1}, derivatives by central
/// differences. Default step per coordinate is 1e-5 * (1 + |x_i|).
double poisson_bracket(const PointFunction& f, const PointFunction& g,
                       const SymplecticForm& omega, std::span<const double> point,
                       double step = 0.0);

/// Axis aligned box [lo_i, hi_i].
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    static Box unit(int dim);
};

/// <f> = int f omega^n/n! / int omega^n/n! over a bounded box, for a
/// constant-coefficient omega (Liouville density |Pf(omega)|).
AverageResult symplectic_average(const PointFunction& f, const SymplecticForm& omega,
                                 const Box& domain, const QuadratureSpec& quad);

/// Function of n complex coordinates.
using ComplexFunction = std::function<double(std::span<const std::complex<double>>)>;

/// <f> with weight exp(-h_ij conj(z^i) z^j) over C^n = R^{2n}.
AverageResult hermitian_average(const ComplexFunction& f, const Eigen::MatrixXcd& h,
                                const QuadratureSpec& quad);

}  // namespace gcfluct
