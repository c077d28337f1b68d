#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gcfluct/errors.hpp"
#include "gcfluct/unruh_frames.hpp"

using namespace gcfluct;

namespace {

const PhysicalConstants kNat = PhysicalConstants::natural();

// Independent composite Simpson for the oracle integrands.
template <class F>
double simpson(F f, double a, double b, int steps) {
    const double h = (b - a) / steps;
    double s = f(a) + f(b);
    for (int i = 1; i < steps; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("frame kinematics") {
    const FrameSpec fs{3.0, 1.0};
    CHECK(accelerated_coords(1.25, 0.0, fs) == 1.25);
    CHECK(accelerated_coords(0.0, 2.0, fs) == 6.0);

    const TransformedHamiltonian th = transformed_hamiltonian(10.0, 4.0, 1.0, FrameSpec{2.0, 2.0});
    CHECK(th.H_prime == 6.0);
    CHECK(th.p_prime == 0.0);

    const FrameSpec inertial{0.0, 2.0};
    CHECK(transformed_hamiltonian(7.5, 3.0, 4.0, inertial).H_prime == 7.5);
    CHECK(accelerated_coords(2.0, 5.0, inertial) == 2.0);

    // at p_x = m alpha t the shift is -(m/2) alpha^2 t^2
    const FrameSpec f2{1.5, 2.0};
    const double t = 0.8, px = 2.0 * 1.5 * t;
    CHECK(transformed_hamiltonian(5.0, px, t, f2).H_prime ==
          doctest::Approx(5.0 - 0.5 * 2.0 * 1.5 * 1.5 * t * t).epsilon(1e-15));
}

TEST_CASE("unruh phase") {
    CHECK(unruh_phase(FrameSpec{1.0, 1.0}, 0.0, kNat) == 0.0);
    CHECK(unruh_phase(FrameSpec{1.0, 1.0}, 1.0, kNat) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(unruh_phase(FrameSpec{3.0, 2.0}, 2.0, kNat) == doctest::Approx(48.0).epsilon(1e-15));
    CHECK(delta_xi(BFieldSpec::constant(2.0 / 3.0), FrameSpec{3.0, 2.0}, 2.0) / kNat.hbar ==
          doctest::Approx(48.0).epsilon(1e-14));
}

TEST_CASE("de broglie time and unruh temperature") {
    const std::complex<double> t1 = debroglie_time(1.0, kNat);
    CHECK(t1 == std::complex<double>(0.0, -1.0));
    CHECK(std::abs(debroglie_time(2.0, kNat)) == 0.5);
    const std::complex<double> back = std::complex<double>(0.0, -1.0) / debroglie_time(3.0, kNat);
    CHECK(back == std::complex<double>(3.0, 0.0));

    CHECK(unruh_temperature(0.0, kNat) == 0.0);
    CHECK(unruh_temperature(2.0 * std::numbers::pi, kNat) == doctest::Approx(1.0).epsilon(1e-15));
    const PhysicalConstants si = PhysicalConstants::si();
    for (double a : {1e-3, 1.0, 9.81, 2.5e20}) {
        CHECK(std::abs(acceleration_of(unruh_temperature(a, si), si) / a - 1.0) <= 1e-15);
        CHECK(std::abs(acceleration_of(unruh_temperature(a, kNat), kNat) / a - 1.0) <= 1e-15);
    }
    CHECK_THROWS_AS(unruh_temperature(-1.0, kNat), DomainError);
}

TEST_CASE("thermal exponent") {
    const double e = thermal_exponent(1.0, 1.0, kNat);
    CHECK(e == doctest::Approx(-4.0 * std::numbers::pi * std::numbers::pi / 3.0).epsilon(1e-15));
    CHECK(std::abs(e - (-13.159473)) < 1e-6);
    const double hot = thermal_exponent(1.0, 1e12, kNat);
    CHECK(hot < 0.0);
    CHECK(hot > -1e-10);
    CHECK_THROWS_AS(thermal_exponent(1.0, 0.0, kNat), DomainError);

    // chain: phase exponent at the de Broglie time and the Unruh acceleration
    for (double T : {0.3, 1.0, 4.0}) {
        const std::complex<double> z =
            phase_exponent(2.0, acceleration_of(T, kNat), debroglie_time(T, kNat), kNat);
        CHECK(std::abs(z.imag()) <= 1e-12 * std::abs(z.real()));
        CHECK(z.real() == doctest::Approx(thermal_exponent(2.0, T, kNat)).epsilon(1e-12));
    }
}

TEST_CASE("delta xi along the accelerated trajectory") {
    const BFieldSpec two_thirds = BFieldSpec::constant(2.0 / 3.0);
    CHECK(delta_xi(two_thirds, FrameSpec{1.0, 1.0}, 0.0) == 0.0);
    CHECK(delta_xi(two_thirds, FrameSpec{1.0, 1.0}, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    // (3/2) B m alpha^2 tau^2 with B = 1, m = 2, alpha = 3
    const double oracle = simpson([](double tau) { return 1.5 * 2.0 * 9.0 * tau * tau; }, 0.0, 2.0, 64);
    CHECK(oracle == doctest::Approx(72.0).epsilon(1e-14));
    CHECK(delta_xi(BFieldSpec::constant(1.0), FrameSpec{3.0, 2.0}, 2.0) ==
          doctest::Approx(72.0).epsilon(1e-14));

    const BFieldSpec bx{[](double x, double) { return x; }};
    CHECK(delta_xi(bx, FrameSpec{1.0, 1.0}, 1.0) == doctest::Approx(0.15).epsilon(1e-10));
}

TEST_CASE("quadrature convergence on a nonconstant field") {
    const BFieldSpec bx{[](double x, double) { return x; }};
    const FrameSpec fs{1.3, 0.7};
    const double t = 2.0;
    const double exact = 0.15 * fs.m * std::pow(fs.alpha, 3) * std::pow(t, 5);
    const double e16 = std::abs(delta_xi(bx, fs, t, 16) - exact);
    const double e32 = std::abs(delta_xi(bx, fs, t, 32) - exact);
    const double e64 = std::abs(delta_xi(bx, fs, t, 64) - exact);
    CHECK(e16 / e32 >= 8.0);
    CHECK(e32 / e64 >= 8.0);
    CHECK(std::abs(delta_xi(BFieldSpec::constant(0.4), fs, t) - 0.5 * 0.4 * fs.m * fs.alpha * fs.alpha * t * t * t) <=
          1e-12);
}

TEST_CASE("contraction conventions") {
    const FrameSpec fs{1.0, 1.0};
    const BFieldSpec b = BFieldSpec::constant(1.0);
    const double sym = delta_xi(b, fs, 1.0, 1024, ContractionConvention::Symmetric);
    const double anti = delta_xi(b, fs, 1.0, 1024, ContractionConvention::Antisymmetric);
    CHECK(sym == doctest::Approx(0.5).epsilon(1e-15));
    // B_ij X^j with X = (x, p) gives B p dx - B x dp, integrand (1/2) m alpha^2 tau^2
    CHECK(anti == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("custom trajectories are checked") {
    const FrameSpec fs{1.0, 1.0};
    TrajectorySpec bad = TrajectorySpec::uniformly_accelerated(fs);
    bad.dx = [](double) { return 0.0; };
    CHECK_THROWS_AS(delta_xi(BFieldSpec::constant(1.0), bad, 1.0), DomainError);
    CHECK_THROWS_AS(delta_xi(BFieldSpec::constant(1.0), fs, 1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(delta_xi(BFieldSpec::constant(1.0), fs, -1.0), DomainError);

    TrajectorySpec circle;
    circle.x = [](double s) { return std::cos(s); };
    circle.p = [](double s) { return std::sin(s); };
    circle.dx = [](double s) { return -std::sin(s); };
    circle.dp = [](double s) { return std::cos(s); };
    // x dp + p dx = d(xp) integrates to sin(t)cos(t)
    CHECK(delta_xi(BFieldSpec::constant(1.0), circle, 1.0) ==
          doctest::Approx(std::sin(1.0) * std::cos(1.0)).epsilon(1e-12));
}

TEST_CASE("wavefunction phase") {
    CHECK(transform_wavefunction_phase(0.0, kNat) == std::complex<double>(1.0, 0.0));
    const auto half = transform_wavefunction_phase(std::numbers::pi, kNat);
    CHECK(half.real() == doctest::Approx(-1.0));
    CHECK(std::abs(half.imag()) < 1e-15);
    const double dxi = delta_xi(BFieldSpec::constant(2.0 / 3.0), FrameSpec{1.0, 1.0}, 1.0);
    const auto psi = transform_wavefunction_phase(dxi, kNat);
    CHECK(std::abs(psi - std::exp(std::complex<double>(0.0, unruh_phase(FrameSpec{1.0, 1.0}, 1.0, kNat)))) <
          1e-15);
    for (double x : {0.1, 3.0, -40.0, 1e6}) CHECK(std::abs(std::abs(transform_wavefunction_phase(x, kNat)) - 1.0) <= 1e-15);
}
