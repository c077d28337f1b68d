#include "gcfluct/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "gcfluct/coherent_oscillator.hpp"
#include "gcfluct/fluctuation_stats.hpp"
#include "gcfluct/unruh_frames.hpp"

namespace gcfluct {

namespace {

Matrix random_matrix(int dim, std::mt19937_64& gen, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = u(gen);
    }
    return m;
}

Vector random_vector(int dim, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = u(gen);
    return v;
}

// I + small perturbation: condition number stays O(1).
Matrix random_near_identity(int dim, std::mt19937_64& gen) {
    return Matrix::Identity(dim, dim) + random_matrix(dim, gen, 0.5 / dim);
}

class Checks {
public:
    void at_most(std::string name, double value, double limit) {
        out_.push_back({std::move(name), std::isnan(value) ? INFINITY : value, limit,
                        Bound::AtMost});
    }
    void at_least(std::string name, double value, double limit) {
        out_.push_back({std::move(name), std::isnan(value) ? -INFINITY : value, limit,
                        Bound::AtLeast});
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::vector<CheckResult> out_;
};

void gcs_checks(Checks& checks, int n, int trials, std::mt19937_64& gen) {
    double sym_axioms = 0.0, cplx_axioms = 0.0, bt_axioms = 0.0;
    double closed_sym = 0.0, closed_cplx = 0.0, inverse = 0.0;
    double type_sym = 0.0, type_cplx = 0.0, type_bt = 0.0;
    double vec_iso = 0.0, contraction = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const SymplecticForm omega = random_symplectic(n, gen);
        const ComplexStructure j = random_complex(n, gen);
        const TwoForm b = random_two_form(n, gen);
        const Gcs gs = build_symplectic_gcs(omega);
        const Gcs gc = build_complex_gcs(j);
        const Gcs gs_b = b_transform_gcs(gs, b);
        const Gcs gc_b = b_transform_gcs(gc, b);

        sym_axioms = std::max(sym_axioms, verify_gcs(gs).max_residual());
        cplx_axioms = std::max(cplx_axioms, verify_gcs(gc).max_residual());
        bt_axioms = std::max({bt_axioms, verify_gcs(gs_b).max_residual(),
                              verify_gcs(gc_b).max_residual()});
        closed_sym = std::max(closed_sym,
                              max_abs(gs_b.matrix() - b_transformed_symplectic(omega, b).matrix()));
        closed_cplx = std::max(closed_cplx,
                               max_abs(gc_b.matrix() - b_transformed_complex(j, b).matrix()));
        inverse = std::max(inverse, max_abs(b_transform_gcs(gs_b, -b).matrix() - gs.matrix()));
        type_sym = std::max(type_sym, std::abs(gcs_type(gs) - 0.0));
        type_cplx = std::max(type_cplx, std::abs(gcs_type(gc) - static_cast<double>(n)));
        type_bt = std::max({type_bt, std::abs(gcs_type(gs_b) - gcs_type(gs) + 0.0),
                            std::abs(gcs_type(gc_b) - gcs_type(gc) + 0.0)});

        const Vector x = random_vector(2 * n, gen);
        const GeneralizedVector v(x, random_vector(2 * n, gen));
        const GeneralizedVector w(random_vector(2 * n, gen), random_vector(2 * n, gen));
        vec_iso = std::max(vec_iso, std::abs(inner_product(b_transform_vector(v, b),
                                                           b_transform_vector(w, b)) -
                                             inner_product(v, w)));
        contraction = std::max(contraction, std::abs(x.dot(interior_product(x, b))));
    }
    const auto [pos, neg] = signature(inner_product_matrix(n));
    checks.at_most("gcs.symplectic_axioms", sym_axioms, kGcsTolerance);
    checks.at_most("gcs.complex_axioms", cplx_axioms, kGcsTolerance);
    checks.at_most("gcs.b_transform_axioms", bt_axioms, kGcsTolerance);
    checks.at_most("gcs.b_transform_closed_form_symplectic", closed_sym, 1e-12);
    checks.at_most("gcs.b_transform_closed_form_complex", closed_cplx, 1e-12);
    checks.at_most("gcs.b_transform_group_inverse", inverse, 1e-12);
    checks.at_most("gcs.type_symplectic_is_0", type_sym, 0.0);
    checks.at_most("gcs.type_complex_is_n", type_cplx, 0.0);
    checks.at_most("gcs.type_b_invariant", type_bt, 0.0);
    checks.at_most("gcs.signature_2n_2n", std::abs(pos - 2 * n) + std::abs(neg - 2 * n), 0.0);
    checks.at_most("gcs.b_transform_vector_isometry", vec_iso, 1e-12);
    checks.at_most("gcs.interior_product_self_pairing", contraction, 1e-13);
}

void fluctuation_checks(Checks& checks, int n, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::uniform_real_distribution<double> d(-0.3, 0.3);

    double log_consistency = 0.0;
    double prob_bound = 0.0;
    for (int i = 0; i < 50; ++i) {
        ThermoState s;
        s.T = u(gen);
        s.V = u(gen);
        s.C_V = u(gen);
        s.dPdV_T = -u(gen);
        const double dT = d(gen);
        const double dV = d(gen);
        const FluctuationMetric g = fluctuation_metric(s);
        log_consistency = std::max(
            log_consistency,
            std::abs(gaussian_fluct_log_prob_tv(s, dT, dV) + (g.g_TT * dT * dT + g.g_VV * dV * dV)));
        prob_bound = std::max(prob_bound, gaussian_fluct_prob_tv(s, dT, dV) - 1.0);
    }
    checks.at_most("fluct.log_prob_equals_metric_form", log_consistency, 0.0);
    checks.at_most("fluct.prob_at_most_one", prob_bound, 0.0);

    const std::vector<RectanglePatch> patches{{1, d(gen), d(gen), 1}, {2, d(gen), d(gen), 1}};
    const double area = symplectic_area(patches);
    checks.at_most("fluct.darboux_prob_is_exp_area",
                   std::abs(fluct_prob_darboux(patches[0].dp, patches[0].dq, patches[1].dp,
                                               patches[1].dq, 1.0) -
                            std::exp(-0.5 * area)),
                   0.0);

    // Ideal gas P = V = T = S0 = 1 along a fixed fluctuation direction.
    ThermoState gas;
    gas.P = gas.V = gas.T = gas.S = 1.0;
    const IdealGasRefs refs;
    auto gap = [&](double eps) {
        const double dP = 0.8 * eps, dV = 0.5 * eps, dT = 0.6 * eps, dS = 0.9 * eps;
        const DarbouxPoint dd = darboux_deltas(gas, dP, dV, dT, dS, refs);
        return std::abs(std::log(fluct_prob_physical(gas, dP, dV, dT, dS, refs)) -
                        std::log(fluct_prob_darboux(dd.p1, dd.q1, dd.p2, dd.q2, refs.S0)));
    };
    const double g1 = gap(0.1), g2 = gap(0.05), g3 = gap(0.025);
    const double order = std::min(std::log2(g1 / g2), std::log2(g2 / g3));
    checks.at_least("fluct.darboux_vs_physical_order", order, 2.7);

    const SymplecticForm omega = random_symplectic(n, gen);
    std::vector<double> point(static_cast<std::size_t>(2 * n));
    for (auto& p : point) p = d(gen);
    const PointFunction f = [](std::span<const double> x) {
        return x[0] * x[0] * x[1] + 0.5 * x[1] * x[x.size() - 1];
    };
    const PointFunction g = [](std::span<const double> x) {
        return std::sin(x[0]) + x[1] * x[1] * x[1];
    };
    const PointFunction h = [](std::span<const double> x) {
        return x[0] * x[1] + x[x.size() - 1] * x[x.size() - 1];
    };
    checks.at_most("fluct.poisson_antisymmetry",
                   std::abs(poisson_bracket(f, g, omega, point) + poisson_bracket(g, f, omega, point)),
                   1e-10);
    auto bracket_fn = [&omega](const PointFunction& a, const PointFunction& b) -> PointFunction {
        return [&omega, a, b](std::span<const double> x) {
            return poisson_bracket(a, b, omega, x, 1e-4);
        };
    };
    const double jacobi = poisson_bracket(f, bracket_fn(g, h), omega, point, 1e-4) +
                          poisson_bracket(g, bracket_fn(h, f), omega, point, 1e-4) +
                          poisson_bracket(h, bracket_fn(f, g), omega, point, 1e-4);
    checks.at_most("fluct.poisson_jacobi", std::abs(jacobi), 1e-5);

    QuadratureSpec grid;
    const FluctuationMetric metric{1.0, 2.0};
    const auto one2 = [](double, double) { return 1.0; };
    checks.at_most("fluct.riemann_norm_grid",
                   std::abs(riemann_average(one2, metric, grid).value - 1.0), 1e-9);
    checks.at_most("fluct.riemann_second_moment_grid",
                   std::abs(riemann_average([](double t, double) { return t * t; }, metric, grid)
                                .value -
                            0.5),
                   1e-6);
    QuadratureSpec mc;
    mc.scheme = QuadratureScheme::MonteCarlo;
    mc.samples = 200'000;
    const AverageResult mc_one = riemann_average(one2, metric, mc);
    checks.at_most("fluct.riemann_norm_mc", std::abs(mc_one.value - 1.0), 3.0 * mc_one.std_error);

    const int ns = std::min(n, 2);
    QuadratureSpec box_grid;
    box_grid.points = 11;
    const PointFunction q1 = [](std::span<const double> x) { return x[1]; };
    checks.at_most("fluct.symplectic_mean_q1",
                   std::abs(symplectic_average(q1, standard_symplectic(ns), Box::unit(2 * ns),
                                               box_grid)
                                .value -
                            0.5),
                   1e-12);

    Eigen::MatrixXcd hm(1, 1);
    hm(0, 0) = 2.0;
    const ComplexFunction absz2 = [](std::span<const Complex> z) { return std::norm(z[0]); };
    checks.at_most("fluct.hermitian_second_moment",
                   std::abs(hermitian_average(absz2, hm, grid).value - 0.5), 1e-6);
}

void coherent_checks(Checks& checks) {
    double moments = 0.0;
    double residual_excess = 0.0;
    for (double re : {0.0, 0.5, 1.0, -1.3, 2.0}) {
        for (double im : {0.0, 0.7}) {
            const Complex z(re, im);
            if (std::abs(z) > 2.0) continue;
            const OscillatorMoments mo = oscillator_moments(z, 64);
            moments = std::max({moments, std::abs(mo.mean_H - (std::norm(z) + 0.5)),
                                std::abs(mo.delta_H - std::abs(z))});
            const FockVector v = coherent_state_vector(z, 64);
            const double bound = 10.0 * std::sqrt(65.0 * coherent_tail_bound(z, 64)) + 1e-14;
            residual_excess = std::max(residual_excess, annihilation_residual(v, z) - bound);
        }
    }
    checks.at_most("coherent.moments_closed_form", moments, 1e-8);
    checks.at_most("coherent.eigenvector_residual_excess", residual_excess, 0.0);
    checks.at_most("coherent.relative_fluctuation_z10",
                   std::abs(relative_fluctuation(10.0) - 0.1) / 0.1, 0.005);
}

void unruh_checks(Checks& checks) {
    const PhysicalConstants pc;
    double equivalence = 0.0;
    double closed = 0.0;
    for (double m : {0.5, 1.0, 2.0}) {
        for (double a : {0.5, 1.0, 2.0}) {
            for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
                const FrameSpec fs{a, m};
                const double dxi = delta_xi(BFieldSpec::constant(kDefaultBField), fs, t);
                const double phase = unruh_phase(fs, t, pc);
                equivalence = std::max(equivalence, std::abs(dxi / pc.hbar - phase) / phase);
            }
        }
    }
    for (double t : {0.25, 0.5, 1.0}) {
        const double dxi = delta_xi(BFieldSpec::constant(1.0), FrameSpec{1.0, 1.0}, t);
        closed = std::max(closed, std::abs(dxi - 0.5 * t * t * t));
    }
    checks.at_most("unruh.delta_xi_equals_phase", equivalence, 1e-9);
    checks.at_most("unruh.constant_b_closed_form", closed, 1e-12);

    double chain = 0.0;
    double imag = 0.0;
    for (double m : {0.3, 1.0, 4.0}) {
        for (double temp : {0.2, 1.0, 7.5}) {
            const std::complex<double> e =
                phase_exponent(m, acceleration_of(temp, pc), debroglie_time(temp, pc), pc);
            const double expect = thermal_exponent(m, temp, pc);
            chain = std::max(chain, std::abs(e.real() - expect) / std::abs(expect));
            imag = std::max(imag, std::abs(e.imag()));
        }
    }
    checks.at_most("unruh.thermal_chain_relative", chain, 1e-12);
    checks.at_most("unruh.thermal_chain_imaginary", imag, 1e-12);

    double modulus = 0.0;
    for (double x : {0.0, 0.3, 1.0 / 3.0, std::numbers::pi, 48.0, 1e3}) {
        modulus = std::max(modulus, std::abs(std::abs(transform_wavefunction_phase(x, pc)) - 1.0));
    }
    checks.at_most("unruh.phase_unit_modulus", modulus, 1e-15);

    const FrameSpec still{0.0, 1.5};
    checks.at_most("unruh.inertial_limit",
                   std::abs(transformed_hamiltonian(3.0, 2.0, 1.7, still).H_prime - 3.0) +
                       std::abs(accelerated_coords(0.4, 1.7, still) - 0.4),
                   0.0);
}

}  // namespace

bool CheckResult::pass() const {
    return bound == Bound::AtMost ? value <= limit : value >= limit;
}

SymplecticForm random_symplectic(int n, std::mt19937_64& gen) {
    const Matrix a = random_near_identity(2 * n, gen);
    const Matrix m = a.transpose() * standard_symplectic(n).matrix() * a;
    return SymplecticForm(Matrix(0.5 * (m - m.transpose())));
}

ComplexStructure random_complex(int n, std::mt19937_64& gen) {
    const Matrix s = random_near_identity(2 * n, gen);
    return ComplexStructure(Matrix(s * standard_complex(n).matrix() * s.inverse()));
}

TwoForm random_two_form(int n, std::mt19937_64& gen, double scale) {
    const Matrix m = random_matrix(2 * n, gen, scale);
    return TwoForm(Matrix(0.5 * (m - m.transpose())));
}

std::vector<CheckResult> run_verify_suite(const VerifyOptions& opts) {
    if (opts.n < 1) throw std::invalid_argument("verify: n must be >= 1");
    if (opts.trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
    std::mt19937_64 gen(opts.seed);

    Checks checks;
    if (opts.candidate) {
        for (const auto& c : verify_gcs(*opts.candidate).checks) {
            checks.at_most("input." + c.name, c.residual, c.tolerance);
        }
    }
    gcs_checks(checks, opts.n, opts.trials, gen);
    fluctuation_checks(checks, opts.n, gen);
    coherent_checks(checks);
    unruh_checks(checks);
    return checks.take();
}

std::string format_check(const CheckResult& c) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-4s  %-44s  value=%-12.4e  %s %.3g", c.pass() ? "PASS" : "FAIL",
                  c.name.c_str(), c.value, c.bound == Bound::AtMost ? "limit<=" : "limit>=",
                  c.limit);
    return buf;
}

}  // namespace gcfluct
