#include "gcfluct/coherent_oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gcfluct/errors.hpp"

namespace gcfluct {

double FockVector::norm_squared() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return s;
}

double coherent_tail_bound(Complex z, int cutoff) {
    const double r = std::abs(z);
    if (r == 0.0) return 0.0;
    const double lam = r * r;
    const double m = cutoff + 1.0;
    // Later terms shrink at least by lam / (m + 1), so the tail is below a
    // geometric series. Without that decay only the trivial bound is left.
    if (lam >= m + 1.0) return 1.0;
    const double first = std::exp(-lam + m * std::log(lam) - std::lgamma(m + 1.0));
    return std::min(1.0, first * (m + 1.0) / (m + 1.0 - lam));
}

int recommended_cutoff(Complex z) {
    const double r = std::abs(z);
    return static_cast<int>(std::ceil(r * r + 6.0 * r + 10.0));
}

FockVector coherent_state_vector(Complex z, int cutoff, std::optional<double> tail_tolerance) {
    if (cutoff < 0) throw std::invalid_argument("coherent_state_vector: cutoff must be >= 0");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("coherent_state_vector: amplitude must be finite");
    }
    if (tail_tolerance) {
        const double tail = coherent_tail_bound(z, cutoff);
        if (tail > *tail_tolerance) {
            std::ostringstream os;
            os << "coherent_state_vector: cutoff " << cutoff << " too small for |z|=" << std::abs(z)
               << " (tail bound " << tail << " > " << *tail_tolerance << ", recommended "
               << recommended_cutoff(z) << ")";
            throw DomainError(os.str());
        }
    }
    FockVector v;
    v.cutoff = cutoff;
    v.coeffs.resize(static_cast<std::size_t>(cutoff) + 1);
    Complex c = std::exp(-0.5 * std::norm(z));
    for (int n = 0; n <= cutoff; ++n) {
        v.coeffs[static_cast<std::size_t>(n)] = c;
        c *= z / std::sqrt(n + 1.0);
    }
    return v;
}

double annihilation_residual(const FockVector& v, Complex z) {
    double s = 0.0;
    const auto size = v.coeffs.size();
    for (std::size_t m = 0; m < size; ++m) {
        const Complex lowered =
            m + 1 < size ? std::sqrt(static_cast<double>(m + 1)) * v.coeffs[m + 1] : Complex{};
        s += std::norm(lowered - z * v.coeffs[m]);
    }
    return std::sqrt(s);
}

OscillatorMoments oscillator_moments(Complex z, int cutoff, double tail_tolerance) {
    const FockVector v = coherent_state_vector(z, cutoff, tail_tolerance);
    const double norm = v.norm_squared();
    double mean = 0.0;
    for (int n = 0; n <= cutoff; ++n) mean += std::norm(v.coeffs[n]) * (n + 0.5);
    mean /= norm;
    double var = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        const double d = n + 0.5 - mean;
        var += std::norm(v.coeffs[n]) * d * d;
    }
    var /= norm;
    return {mean, std::sqrt(var)};
}

double relative_fluctuation(Complex z) {
    const double r = std::abs(z);
    if (r == 0.0) throw DomainError("relative_fluctuation: undefined at z = 0");
    return r / (r * r + 0.5);
}

}  // namespace gcfluct
