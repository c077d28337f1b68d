#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace gcfluct {

using Complex = std::complex<double>;

/// Truncated Fock-space vector (c_0 .. c_N).
struct FockVector {
    int cutoff = 0;
    std::vector<Complex> coeffs;

    double norm_squared() const;
};

/// Upper bound on 1 - sum |c_n|^2 for the coherent state truncated at N:
/// the first omitted Poisson term e^{-|z|^2} |z|^{2(N+1)} / (N+1)! times
/// (N+2) / (N+2 - |z|^2). Returns 1 when |z|^2 >= N+2.
double coherent_tail_bound(Complex z, int cutoff);

/// ceil(|z|^2 + 6|z| + 10)
int recommended_cutoff(Complex z);

/// c_n = e^{-|z|^2/2} z^n / sqrt(n!), by the recurrence c_{n+1} = c_n z / sqrt(n+1).
/// When `tail_tolerance` is given, throws DomainError if the tail bound
/// exceeds it.
FockVector coherent_state_vector(Complex z, int cutoff,
                                 std::optional<double> tail_tolerance = std::nullopt);

/// ||(A - z) c|| with the truncated annihilation operator A|n> = sqrt(n)|n-1>.
double annihilation_residual(const FockVector& v, Complex z);

struct OscillatorMoments {
    double mean_H = 0.0;
    double delta_H = 0.0;
};

/// <H> and Delta H for H = diag(n + 1/2) in the truncated, renormalised
/// coherent state.
OscillatorMoments oscillator_moments(Complex z, int cutoff, double tail_tolerance = 1e-10);

/// |z| / (|z|^2 + 1/2); throws DomainError at z = 0.
double relative_fluctuation(Complex z);

}  // namespace gcfluct
