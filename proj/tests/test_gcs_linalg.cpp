#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "gcfluct/gcs_linalg.hpp"
#include "gcfluct/verify_suite.hpp"

using namespace gcfluct;

namespace {

Matrix m2(double a, double b, double c, double d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Vector v2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

// Explicit 2x2 inverse.
Matrix inverse2(const Matrix& m) {
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)) / det;
}

// Triple product written out with hand-built exponentials.
Matrix conjugate_by_b(const Matrix& g, const Matrix& b) {
    const Eigen::Index d = b.rows();
    Matrix plus = Matrix::Identity(2 * d, 2 * d);
    Matrix minus = Matrix::Identity(2 * d, 2 * d);
    plus.bottomLeftCorner(d, d) = b;
    minus.bottomLeftCorner(d, d) = -b;
    return minus * g * plus;
}

}  // namespace

TEST_CASE("inner product examples") {
    const Vector zero = Vector::Zero(2);
    const GeneralizedVector dx_vec(v2(1, 0), zero);
    const GeneralizedVector dx_form(zero, v2(1, 0));
    const GeneralizedVector both(v2(1, 0), v2(1, 0));
    const GeneralizedVector dp_vec(v2(0, 1), zero);
    CHECK(inner_product(dx_vec, dx_form) == 0.5);
    CHECK(inner_product(both, both) == 1.0);
    CHECK(inner_product(dx_vec, dp_vec) == 0.0);
}

TEST_CASE("inner product matrix and signature") {
    const Matrix g = inner_product_matrix(1);
    Matrix expect = Matrix::Zero(4, 4);
    expect.topRightCorner(2, 2) = 0.5 * Matrix::Identity(2, 2);
    expect.bottomLeftCorner(2, 2) = 0.5 * Matrix::Identity(2, 2);
    CHECK(max_abs(g - expect) == 0.0);

    for (int n = 1; n <= 6; ++n) {
        const Matrix gram = inner_product_matrix(n);
        // general (non-symmetric) eigen solver as an independent oracle
        Eigen::EigenSolver<Matrix> es(gram);
        int pos = 0, neg = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double lam = es.eigenvalues()(i).real();
            CHECK(std::abs(std::abs(lam) - 0.5) < 1e-12);
            (lam > 0 ? pos : neg)++;
        }
        CHECK(pos == 2 * n);
        CHECK(neg == 2 * n);
        const auto [p, q] = signature(gram);
        CHECK(p == 2 * n);
        CHECK(q == 2 * n);
    }
}

TEST_CASE("symplectic structure n=1") {
    const SymplecticForm w = standard_symplectic(1);
    CHECK(max_abs(w.matrix() - m2(0, 1, -1, 0)) == 0.0);
    const Gcs g = build_symplectic_gcs(w);
    CHECK(max_abs(g.matrix() * g.matrix() + Matrix::Identity(4, 4)) == 0.0);
    CHECK(max_abs(g.upper_right() - (-inverse2(w.matrix()))) < 1e-15);
    CHECK(max_abs(g.upper_right() - w.matrix()) < 1e-15);
    CHECK(max_abs(g.lower_left() - w.matrix()) == 0.0);
    CHECK(gcs_type(g) == 0);
}

TEST_CASE("complex structure n=1 and n=2") {
    const ComplexStructure j = standard_complex(1);
    CHECK(max_abs(j.matrix() - m2(0, -1, 1, 0)) == 0.0);
    const Gcs g = build_complex_gcs(j);
    CHECK(max_abs(g.matrix() * g.matrix() + Matrix::Identity(4, 4)) == 0.0);
    CHECK(max_abs(g.upper_right()) == 0.0);
    CHECK(gcs_type(g) == 1);
    CHECK(gcs_type(build_complex_gcs(standard_complex(2))) == 2);
}

TEST_CASE("b-transform of the standard symplectic structure by (2/3) omega") {
    const SymplecticForm w = standard_symplectic(1);
    const Matrix om = w.matrix();
    const TwoForm b(Matrix((2.0 / 3.0) * om));
    const Gcs g = b_transform_gcs(build_symplectic_gcs(w), b);

    CHECK(max_abs(g.upper_left() - (-2.0 / 3.0) * Matrix::Identity(2, 2)) < 1e-15);
    CHECK(max_abs(g.upper_right() - om) < 1e-15);
    CHECK(max_abs(g.lower_left() - (13.0 / 9.0) * om) < 1e-15);
    CHECK(max_abs(g.lower_right() - (2.0 / 3.0) * Matrix::Identity(2, 2)) < 1e-15);

    const Matrix oracle = conjugate_by_b(build_symplectic_gcs(w).matrix(), b.matrix());
    CHECK(max_abs(g.matrix() - oracle) < 1e-15);
    CHECK(max_abs(b_transformed_symplectic(w, b).matrix() - oracle) < 1e-15);
    CHECK(verify_gcs(g).all_pass());
    CHECK(gcs_type(g) == 0);
}

TEST_CASE("b-transform identities") {
    std::mt19937_64 gen(7);
    for (int n = 1; n <= 3; ++n) {
        const Gcs g = build_symplectic_gcs(random_symplectic(n, gen));
        CHECK(max_abs(b_transform_gcs(g, TwoForm::zero(n)).matrix() - g.matrix()) == 0.0);

        const ComplexStructure j = random_complex(n, gen);
        const TwoForm b = random_two_form(n, gen);
        const Gcs gj = b_transform_gcs(build_complex_gcs(j), b);
        CHECK(max_abs(gj.upper_right()) == 0.0);
        CHECK(gcs_type(gj) == n);
        CHECK(max_abs(b_transformed_complex(j, b).matrix() -
                      conjugate_by_b(build_complex_gcs(j).matrix(), b.matrix())) < 1e-12);
    }
}

TEST_CASE("interior product and b-transform of vectors") {
    const TwoForm b(m2(0, 1, -1, 0));
    Vector x = v2(1, 2);
    Vector ix = interior_product(x, b);
    CHECK(ix(0) == 2.0);
    CHECK(ix(1) == -1.0);
    CHECK(interior_product(Vector::Zero(2), b).isZero(0.0));
    CHECK(x.dot(ix) == 0.0);

    const GeneralizedVector dq(v2(1, 0), Vector::Zero(2));
    const GeneralizedVector moved = b_transform_vector(dq, b);
    CHECK(moved.vec_part == dq.vec_part);
    CHECK(moved.form_part(0) == 0.0);
    CHECK(moved.form_part(1) == -1.0);

    const GeneralizedVector form_only(Vector::Zero(2), v2(3, 4));
    const GeneralizedVector same = b_transform_vector(form_only, b);
    CHECK(same.form_part == form_only.form_part);
}

TEST_CASE("verify_gcs rejects the identity") {
    const GcsReport r = verify_gcs(Gcs(Matrix::Identity(4, 4)));
    CHECK_FALSE(r.all_pass());
    CHECK(r.checks.front().name == "square");
    CHECK(r.checks.front().residual == doctest::Approx(2.0));
    CHECK(r.failures().find("square") != std::string::npos);
    CHECK_THROWS_AS(gcs_type(Gcs(Matrix::Identity(4, 4))), DomainError);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Gcs(Matrix::Identity(3, 3)), DimensionError);
    CHECK_THROWS_AS(TwoForm(m2(0, 1, 0.5, 0)), DomainError);
    CHECK_THROWS_AS(SymplecticForm(Matrix::Zero(2, 2)), DomainError);
    CHECK_THROWS_AS(ComplexStructure(Matrix::Identity(2, 2)), DomainError);
}

TEST_CASE("random constructions satisfy the axioms") {
    std::mt19937_64 gen(11);
    for (int n = 1; n <= 5; ++n) {
        const SymplecticForm w = random_symplectic(n, gen);
        const ComplexStructure j = random_complex(n, gen);
        const TwoForm b = random_two_form(n, gen);
        CHECK(verify_gcs(build_symplectic_gcs(w)).max_residual() <= 1e-10);
        CHECK(verify_gcs(build_complex_gcs(j)).max_residual() <= 1e-10);
        CHECK(verify_gcs(b_transform_gcs(build_symplectic_gcs(w), b)).max_residual() <= 1e-10);
        CHECK(gcs_type(b_transform_gcs(build_symplectic_gcs(w), b)) == 0);
    }
}
