#pragma once

// Fibrewise linear algebra of generalized complex structures on T + T*
// over a 2n-dimensional phase space.
//
// Conventions used throughout:
//   * a generalized vector is stored as (X; xi), X the 2n tangent
//     components followed by xi the 2n covector components;
//   * 4n x 4n operators act on that stacked vector and are split into
//     2n x 2n blocks [[A, beta], [B, -A^T]];
//   * the interior product of a 2-form is (i_X B)_i = B_ij X^j.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gcfluct/errors.hpp"

namespace gcfluct {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Axiom tolerance for GCS verification (looser than construction
/// precision to absorb conditioning of user supplied forms).
inline constexpr double kGcsTolerance = 1e-10;
/// Relative singular value cutoff used when computing the type.
inline constexpr double kRankTolerance = 1e-10;
/// Tolerance on J^2 = -1 when accepting a complex structure.
inline constexpr double kComplexStructureTolerance = 1e-12;

/// Element X + xi of the doubled fibre.
struct GeneralizedVector {
    Vector vec_part;   // X, 2n components
    Vector form_part;  // xi, 2n components

    GeneralizedVector(Vector x, Vector xi);

    int n() const { return static_cast<int>(vec_part.size() / 2); }
    Vector stacked() const;
    static GeneralizedVector from_stacked(const Vector& v);
};

/// Antisymmetric 2n x 2n matrix B_ij (exact antisymmetry is required).
class TwoForm {
public:
    explicit TwoForm(Matrix mat);
    static TwoForm zero(int n);

    int n() const { return static_cast<int>(mat_.rows() / 2); }
    const Matrix& matrix() const { return mat_; }
    TwoForm operator-() const { return TwoForm(Matrix(-mat_)); }
    TwoForm operator*(double s) const { return TwoForm(Matrix(s * mat_)); }

private:
    Matrix mat_;
};

/// Nondegenerate antisymmetric form omega_ij. Keeps its inverse, the
/// Poisson tensor pi with omega_ij pi^jk = delta_i^k.
class SymplecticForm {
public:
    explicit SymplecticForm(Matrix mat);

    int n() const { return static_cast<int>(mat_.rows() / 2); }
    const Matrix& matrix() const { return mat_; }
    const Matrix& poisson() const { return inverse_; }
    double condition_number() const { return condition_; }
    TwoForm as_two_form() const { return TwoForm(mat_); }

private:
    Matrix mat_;
    Matrix inverse_;
    double condition_ = 1.0;
};

/// Endomorphism J of the tangent fibre with J^2 = -1.
class ComplexStructure {
public:
    explicit ComplexStructure(Matrix mat);

    int n() const { return static_cast<int>(mat_.rows() / 2); }
    const Matrix& matrix() const { return mat_; }

private:
    Matrix mat_;
};

/// Candidate generalized complex structure: any 4n x 4n real matrix.
/// Whether it satisfies the axioms is answered by verify_gcs.
class Gcs {
public:
    explicit Gcs(Matrix mat);

    int n() const { return static_cast<int>(mat_.rows() / 4); }
    const Matrix& matrix() const { return mat_; }

    Matrix upper_left() const;
    Matrix upper_right() const;  // beta
    Matrix lower_left() const;   // B
    Matrix lower_right() const;

    static Gcs from_blocks(const Matrix& ul, const Matrix& ur, const Matrix& ll,
                           const Matrix& lr);

private:
    Matrix mat_;
};

/// dp_i ^ dq_i summed over pairs, coordinates ordered (p_1, q_1, p_2, q_2, ...).
/// Each 2x2 diagonal block is [[0, 1], [-1, 0]].
SymplecticForm standard_symplectic(int n);
/// Block diagonal [[0, -1], [1, 0]].
ComplexStructure standard_complex(int n);

/// <X + xi, Y + eta> = (xi(Y) + eta(X)) / 2.
double inner_product(const GeneralizedVector& v, const GeneralizedVector& w);
/// Gram matrix of inner_product in the stacked basis: 0.5 [[0, I], [I, 0]].
Matrix inner_product_matrix(int n);

/// Counts of strictly positive / strictly negative eigenvalues of a
/// symmetric matrix. Eigenvalues with |lambda| <= tol * max|lambda| are
/// treated as zero and counted in neither.
std::pair<int, int> signature(const Matrix& symmetric, double tol = 1e-12);

/// (i_X B)_i = B_ij X^j.
Vector interior_product(const Vector& x, const TwoForm& b);

/// [[0, -omega^{-1}], [omega, 0]]
Gcs build_symplectic_gcs(const SymplecticForm& omega);
/// [[-J, 0], [0, J^T]]
Gcs build_complex_gcs(const ComplexStructure& j);

/// exp([[0,0],[B,0]]) = [[I,0],[B,I]].
Matrix b_field_exponential(const TwoForm& b);
/// e^{-B} J e^{B}, computed as an explicit triple product.
Gcs b_transform_gcs(const Gcs& g, const TwoForm& b);
/// X + xi -> X + xi + i_X B.
GeneralizedVector b_transform_vector(const GeneralizedVector& v, const TwoForm& b);

/// Closed block form of the B-transform of a symplectic-type structure:
/// [[-pi B, -pi], [omega + B pi B, B pi]] with pi = omega^{-1}.
Gcs b_transformed_symplectic(const SymplecticForm& omega, const TwoForm& b);
/// Closed block form of the B-transform of a complex-type structure:
/// [[-J, 0], [B J + J^T B, J^T]].
Gcs b_transformed_complex(const ComplexStructure& j, const TwoForm& b);

struct AxiomCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = kGcsTolerance;

    bool pass() const { return residual <= tolerance; }
};

struct GcsReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const;
    double max_residual() const;
    /// Names of failing checks, comma separated ("" when all pass).
    std::string failures() const;
};

/// Checks J^2 = -1, duality (G J antisymmetric), so(2n,2n) block shape and
/// J^T G J = G. Failures are report content, never exceptions.
GcsReport verify_gcs(const Gcs& g, double tol = kGcsTolerance);

/// k = n - rank(beta)/2. Throws DomainError when g fails verify_gcs or when
/// the numerical rank of beta is odd.
int gcs_type(const Gcs& g, double rank_tol = kRankTolerance);

/// Largest absolute entry.
double max_abs(const Matrix& m);

}  // namespace gcfluct
