#include "gcfluct/unruh_frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gcfluct/errors.hpp"
#include "gcfluct/gcs_linalg.hpp"
#include "gcfluct/quadrature.hpp"

namespace gcfluct {

namespace {

using namespace std::complex_literals;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Central-difference check that traj.dx / traj.dp are derivatives of
// traj.x / traj.p on [0, t].
void check_trajectory(const TrajectorySpec& traj, double t) {
    if (!traj.x || !traj.p || !traj.dx || !traj.dp) {
        throw std::invalid_argument("delta_xi: trajectory has unset components");
    }
    constexpr int kSamples = 8;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    const double h = 1e-4 * std::max(1.0, t);
    auto consistent = [&](const std::function<double(double)>& f,
                          const std::function<double(double)>& df, double tau) {
        const double fp = f(tau + h);
        const double fm = f(tau - h);
        const double fd = (fp - fm) / (2.0 * h);
        const double d = df(tau);
        const double tol = 1e-6 * (1.0 + std::abs(d)) + 1e3 * kEps * (std::abs(fp) + std::abs(fm)) / h;
        return std::abs(fd - d) <= tol;
    };
    for (int k = 0; k <= kSamples; ++k) {
        const double tau = t * k / kSamples;
        if (!consistent(traj.x, traj.dx, tau) || !consistent(traj.p, traj.dp, tau)) {
            std::ostringstream os;
            os << "delta_xi: trajectory derivatives inconsistent with the path at tau=" << tau;
            throw DomainError(os.str());
        }
    }
}

}  // namespace

void PhysicalConstants::validate() const {
    if (!(hbar > 0.0 && c > 0.0 && k_B > 0.0)) {
        throw DomainError("PhysicalConstants: hbar, c and k_B must be > 0");
    }
}

void FrameSpec::validate() const {
    if (!(m > 0.0)) throw DomainError("FrameSpec: mass must be > 0");
    if (!std::isfinite(alpha)) throw DomainError("FrameSpec: acceleration must be finite");
}

TrajectorySpec TrajectorySpec::uniformly_accelerated(const FrameSpec& fs) {
    fs.validate();
    const double a = fs.alpha;
    const double m = fs.m;
    return {[a](double tau) { return 0.5 * a * tau * tau; },
            [a, m](double tau) { return m * a * tau; },
            [a](double tau) { return a * tau; },
            [a, m](double) { return m * a; }};
}

BFieldSpec BFieldSpec::constant(double b) {
    return {[b](double, double) { return b; }};
}

double accelerated_coords(double x_prime, double t, const FrameSpec& fs) {
    return x_prime + 0.5 * fs.alpha * t * t;
}

TransformedHamiltonian transformed_hamiltonian(double H, double p_x, double t,
                                               const FrameSpec& fs) {
    return {H - p_x * fs.alpha * t + 0.5 * fs.m * fs.alpha * fs.alpha * t * t,
            p_x - fs.m * fs.alpha * t};
}

double unruh_phase(const FrameSpec& fs, double t, const PhysicalConstants& pc) {
    pc.validate();
    return fs.m * fs.alpha * fs.alpha * t * t * t / (3.0 * pc.hbar);
}

std::complex<double> phase_exponent(double m, double alpha, std::complex<double> t,
                                    const PhysicalConstants& pc) {
    pc.validate();
    return 1i / pc.hbar * (m * alpha * alpha / 3.0) * (t * t * t);
}

std::complex<double> debroglie_time(double T, const PhysicalConstants& pc) {
    pc.validate();
    if (!(T > 0.0)) throw DomainError("debroglie_time: temperature must be > 0");
    return {0.0, -pc.hbar / (pc.k_B * T)};
}

double unruh_temperature(double alpha, const PhysicalConstants& pc) {
    pc.validate();
    if (!(alpha >= 0.0)) throw DomainError("unruh_temperature: acceleration must be >= 0");
    return pc.hbar * alpha / (kTwoPi * pc.c * pc.k_B);
}

double acceleration_of(double T, const PhysicalConstants& pc) {
    pc.validate();
    if (!(T >= 0.0)) throw DomainError("acceleration_of: temperature must be >= 0");
    return kTwoPi * pc.c * pc.k_B * T / pc.hbar;
}

double thermal_exponent(double m, double T, const PhysicalConstants& pc) {
    pc.validate();
    if (!(T > 0.0)) throw DomainError("thermal_exponent: temperature must be > 0");
    if (!(m > 0.0)) throw DomainError("thermal_exponent: mass must be > 0");
    return -(4.0 * std::numbers::pi * std::numbers::pi / 3.0) * m * pc.c * pc.c / (pc.k_B * T);
}

double delta_xi(const BFieldSpec& b, const TrajectorySpec& traj, double t, int steps,
                ContractionConvention convention) {
    if (!b.coefficient) throw std::invalid_argument("delta_xi: B-field coefficient unset");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("delta_xi: t must be finite and >= 0");
    if (steps < 16 || (steps & (steps - 1)) != 0) {
        throw std::invalid_argument("delta_xi: steps must be a power of two >= 16");
    }
    if (t == 0.0) return 0.0;
    check_trajectory(traj, t);

    auto field_at = [&](double tau) {
        const double bv = b.coefficient(traj.x(tau), traj.p(tau));
        if (!std::isfinite(bv)) {
            std::ostringstream os;
            os << "delta_xi: B-field not finite on the trajectory at tau=" << tau;
            throw DomainError(os.str());
        }
        return bv;
    };

    std::function<double(double)> integrand;
    if (convention == ContractionConvention::Symmetric) {
        integrand = [&](double tau) {
            const double bv = field_at(tau);
            return traj.x(tau) * bv * traj.dp(tau) + traj.p(tau) * bv * traj.dx(tau);
        };
    } else {
        integrand = [&](double tau) {
            const double bv = field_at(tau);
            Matrix bm(2, 2);
            bm << 0.0, bv, -bv, 0.0;
            Vector pos(2);
            pos << traj.x(tau), traj.p(tau);
            const Vector xi = interior_product(pos, TwoForm(std::move(bm)));
            return xi(0) * traj.dx(tau) + xi(1) * traj.dp(tau);
        };
    }
    return simpson_integral(integrand, 0.0, t, steps);
}

double delta_xi(const BFieldSpec& b, const FrameSpec& fs, double t, int steps,
                ContractionConvention convention) {
    return delta_xi(b, TrajectorySpec::uniformly_accelerated(fs), t, steps, convention);
}

std::complex<double> transform_wavefunction_phase(double delta_xi_value,
                                                  const PhysicalConstants& pc) {
    pc.validate();
    return std::polar(1.0, delta_xi_value / pc.hbar);
}

}  // namespace gcfluct
