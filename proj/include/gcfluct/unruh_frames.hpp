#pragma once

// Nonrelativistic particle in a uniformly accelerated frame: the phase it
// picks up, its thermal reading through the de Broglie time-temperature
// relation and the Unruh law, and the same phase written as a line integral
// of a B-field along the phase-space trajectory.

#include <complex>
#include <functional>

namespace gcfluct {

struct PhysicalConstants {
    double hbar = 1.0;
    double c = 1.0;
    double k_B = 1.0;

    static PhysicalConstants natural() { return {}; }
    static PhysicalConstants si() { return {1.054571817e-34, 299792458.0, 1.380649e-23}; }

    void validate() const;
};

struct FrameSpec {
    double alpha = 1.0;  // acceleration along x
    double m = 1.0;

    void validate() const;
};

/// Phase-space path tau -> (x, p) and its velocity.
struct TrajectorySpec {
    std::function<double(double)> x;
    std::function<double(double)> p;
    std::function<double(double)> dx;
    std::function<double(double)> dp;

    /// x = alpha tau^2 / 2, p = m alpha tau: the particle at rest at the
    /// origin of the accelerated frame.
    static TrajectorySpec uniformly_accelerated(const FrameSpec& fs);
};

/// Coefficient B(x, p) of the 2-form B dx ^ dp.
struct BFieldSpec {
    std::function<double(double, double)> coefficient;

    static BFieldSpec constant(double b);
};

/// Component convention for i_X B with X = x d_x + p d_p.
enum class ContractionConvention {
    /// delta xi = x B dp + p B dx (reproduces the 3/2 B m alpha^2 t^2 integrand)
    Symmetric,
    /// (i_X B)_i = B_ij X^j with B_xp = B, as in gcs_linalg
    Antisymmetric,
};

inline constexpr double kDefaultBField = 2.0 / 3.0;

/// x = x' + alpha t^2 / 2 (y, z, t unchanged).
double accelerated_coords(double x_prime, double t, const FrameSpec& fs);

struct TransformedHamiltonian {
    double H_prime = 0.0;
    double p_prime = 0.0;
};

/// H' = H - p_x alpha t + m alpha^2 t^2 / 2, p' = p - m alpha t.
TransformedHamiltonian transformed_hamiltonian(double H, double p_x, double t,
                                               const FrameSpec& fs);

/// phi = m alpha^2 t^3 / (3 hbar), so psi' = exp(i phi) psi.
double unruh_phase(const FrameSpec& fs, double t, const PhysicalConstants& pc);

/// (i / hbar) m alpha^2 t^3 / 3 for complex t.
std::complex<double> phase_exponent(double m, double alpha, std::complex<double> t,
                                    const PhysicalConstants& pc);

/// t = -i hbar / (k_B T), from -i / t = k_B T / hbar.
std::complex<double> debroglie_time(double T, const PhysicalConstants& pc);

/// T = hbar alpha / (2 pi c k_B).
double unruh_temperature(double alpha, const PhysicalConstants& pc);
/// alpha = 2 pi c k_B T / hbar.
double acceleration_of(double T, const PhysicalConstants& pc);

/// E = -(4 pi^2 / 3) m c^2 / (k_B T); the Boltzmann-like factor is exp(E).
double thermal_exponent(double m, double T, const PhysicalConstants& pc);

inline constexpr int kDefaultSimpsonSteps = 1024;

/// Delta xi(t) = int_0^t i_X B along the trajectory, composite Simpson with
/// `steps` (a power of two >= 16) intervals.
double delta_xi(const BFieldSpec& b, const TrajectorySpec& traj, double t,
                int steps = kDefaultSimpsonSteps,
                ContractionConvention convention = ContractionConvention::Symmetric);
/// Same, on the default uniformly accelerated trajectory of `fs`.
double delta_xi(const BFieldSpec& b, const FrameSpec& fs, double t,
                int steps = kDefaultSimpsonSteps,
                ContractionConvention convention = ContractionConvention::Symmetric);

/// exp(i Delta xi / hbar).
std::complex<double> transform_wavefunction_phase(double delta_xi_value,
                                                  const PhysicalConstants& pc);

}  // namespace gcfluct
