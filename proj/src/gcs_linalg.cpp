#include "gcfluct/gcs_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gcfluct {

namespace {

void require_even_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
        std::ostringstream os;
        os << what << ": expected a nonempty even square matrix, got " << m.rows() << "x"
           << m.cols();
        throw DimensionError(os.str());
    }
}

void require_antisymmetric(const Matrix& m, const char* what) {
    if (!(m + m.transpose()).isZero(0.0)) {
        throw DomainError(std::string(what) + ": matrix is not antisymmetric");
    }
}

void require_same_n(int a, int b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (n=" << a << " vs n=" << b << ")";
        throw DimensionError(os.str());
    }
}

}  // namespace

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

GeneralizedVector::GeneralizedVector(Vector x, Vector xi)
    : vec_part(std::move(x)), form_part(std::move(xi)) {
    if (vec_part.size() != form_part.size() || vec_part.size() == 0 || vec_part.size() % 2 != 0) {
        throw DimensionError("GeneralizedVector: vector and form parts need 2n entries each");
    }
}

Vector GeneralizedVector::stacked() const {
    Vector out(vec_part.size() * 2);
    out << vec_part, form_part;
    return out;
}

GeneralizedVector GeneralizedVector::from_stacked(const Vector& v) {
    if (v.size() % 4 != 0 || v.size() == 0) {
        throw DimensionError("GeneralizedVector: stacked vector needs 4n entries");
    }
    const auto h = v.size() / 2;
    return {v.head(h), v.tail(h)};
}

TwoForm::TwoForm(Matrix mat) : mat_(std::move(mat)) {
    require_even_square(mat_, "TwoForm");
    require_antisymmetric(mat_, "TwoForm");
}

TwoForm TwoForm::zero(int n) { return TwoForm(Matrix::Zero(2 * n, 2 * n)); }

SymplecticForm::SymplecticForm(Matrix mat) : mat_(std::move(mat)) {
    require_even_square(mat_, "SymplecticForm");
    require_antisymmetric(mat_, "SymplecticForm");
    Eigen::JacobiSVD<Matrix> svd(mat_);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    condition_ = smin > 0.0 ? smax / smin : INFINITY;
    if (!(smin > 1e-14 * smax)) {
        std::ostringstream os;
        os << "SymplecticForm: degenerate form (condition number " << condition_ << ")";
        throw DomainError(os.str());
    }
    inverse_ = mat_.inverse();
}

ComplexStructure::ComplexStructure(Matrix mat) : mat_(std::move(mat)) {
    require_even_square(mat_, "ComplexStructure");
    const Matrix id = Matrix::Identity(mat_.rows(), mat_.cols());
    const double r = max_abs(mat_ * mat_ + id);
    if (!(r <= kComplexStructureTolerance)) {
        std::ostringstream os;
        os << "ComplexStructure: J^2 + 1 residual " << r << " exceeds "
           << kComplexStructureTolerance;
        throw DomainError(os.str());
    }
}

Gcs::Gcs(Matrix mat) : mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0 || mat_.rows() % 4 != 0) {
        std::ostringstream os;
        os << "Gcs: expected a 4n x 4n matrix, got " << mat_.rows() << "x" << mat_.cols();
        throw DimensionError(os.str());
    }
}

Matrix Gcs::upper_left() const {
    const auto h = mat_.rows() / 2;
    return mat_.topLeftCorner(h, h);
}
Matrix Gcs::upper_right() const {
    const auto h = mat_.rows() / 2;
    return mat_.topRightCorner(h, h);
}
Matrix Gcs::lower_left() const {
    const auto h = mat_.rows() / 2;
    return mat_.bottomLeftCorner(h, h);
}
Matrix Gcs::lower_right() const {
    const auto h = mat_.rows() / 2;
    return mat_.bottomRightCorner(h, h);
}

Gcs Gcs::from_blocks(const Matrix& ul, const Matrix& ur, const Matrix& ll, const Matrix& lr) {
    const auto h = ul.rows();
    for (const Matrix* b : {&ul, &ur, &ll, &lr}) {
        if (b->rows() != h || b->cols() != h) throw DimensionError("Gcs: block size mismatch");
    }
    Matrix m(2 * h, 2 * h);
    m << ul, ur, ll, lr;
    return Gcs(std::move(m));
}

SymplecticForm standard_symplectic(int n) {
    if (n < 1) throw DimensionError("standard_symplectic: n must be >= 1");
    Matrix w = Matrix::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        w(2 * i, 2 * i + 1) = 1.0;
        w(2 * i + 1, 2 * i) = -1.0;
    }
    return SymplecticForm(std::move(w));
}

ComplexStructure standard_complex(int n) {
    if (n < 1) throw DimensionError("standard_complex: n must be >= 1");
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(2 * i, 2 * i + 1) = -1.0;
        j(2 * i + 1, 2 * i) = 1.0;
    }
    return ComplexStructure(std::move(j));
}

double inner_product(const GeneralizedVector& v, const GeneralizedVector& w) {
    require_same_n(v.n(), w.n(), "inner_product");
    return 0.5 * (v.form_part.dot(w.vec_part) + w.form_part.dot(v.vec_part));
}

Matrix inner_product_matrix(int n) {
    if (n < 1) throw DimensionError("inner_product_matrix: n must be >= 1");
    const int h = 2 * n;
    Matrix g = Matrix::Zero(2 * h, 2 * h);
    g.topRightCorner(h, h).setIdentity();
    g.bottomLeftCorner(h, h).setIdentity();
    return 0.5 * g;
}

std::pair<int, int> signature(const Matrix& symmetric, double tol) {
    if (symmetric.rows() != symmetric.cols()) throw DimensionError("signature: matrix not square");
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetric, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double scale = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
    int pos = 0;
    int neg = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > tol * scale) ++pos;
        else if (ev(i) < -tol * scale) ++neg;
    }
    return {pos, neg};
}

Vector interior_product(const Vector& x, const TwoForm& b) {
    if (x.size() != b.matrix().rows()) {
        throw DimensionError("interior_product: vector has " + std::to_string(x.size()) +
                             " components, form expects " + std::to_string(b.matrix().rows()));
    }
    return b.matrix() * x;
}

Gcs build_symplectic_gcs(const SymplecticForm& omega) {
    const auto h = omega.matrix().rows();
    return Gcs::from_blocks(Matrix::Zero(h, h), -omega.poisson(), omega.matrix(),
                            Matrix::Zero(h, h));
}

Gcs build_complex_gcs(const ComplexStructure& j) {
    const auto h = j.matrix().rows();
    return Gcs::from_blocks(-j.matrix(), Matrix::Zero(h, h), Matrix::Zero(h, h),
                            j.matrix().transpose());
}

Matrix b_field_exponential(const TwoForm& b) {
    const auto h = b.matrix().rows();
    Matrix e = Matrix::Identity(2 * h, 2 * h);
    e.bottomLeftCorner(h, h) = b.matrix();
    return e;
}

Gcs b_transform_gcs(const Gcs& g, const TwoForm& b) {
    require_same_n(g.n(), b.n(), "b_transform_gcs");
    const Matrix e_plus = b_field_exponential(b);
    const Matrix e_minus = b_field_exponential(-b);
    return Gcs(e_minus * g.matrix() * e_plus);
}

GeneralizedVector b_transform_vector(const GeneralizedVector& v, const TwoForm& b) {
    require_same_n(v.n(), b.n(), "b_transform_vector");
    return {v.vec_part, v.form_part + interior_product(v.vec_part, b)};
}

Gcs b_transformed_symplectic(const SymplecticForm& omega, const TwoForm& b) {
    require_same_n(omega.n(), b.n(), "b_transformed_symplectic");
    const Matrix& w = omega.matrix();
    const Matrix& pi = omega.poisson();
    const Matrix& bm = b.matrix();
    return Gcs::from_blocks(-pi * bm, -pi, w + bm * pi * bm, bm * pi);
}

Gcs b_transformed_complex(const ComplexStructure& j, const TwoForm& b) {
    require_same_n(j.n(), b.n(), "b_transformed_complex");
    const Matrix& jm = j.matrix();
    const Matrix& bm = b.matrix();
    const auto h = jm.rows();
    return Gcs::from_blocks(-jm, Matrix::Zero(h, h), bm * jm + jm.transpose() * bm,
                            jm.transpose());
}

bool GcsReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass(); });
}

double GcsReport::max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
}

std::string GcsReport::failures() const {
    std::string out;
    for (const auto& c : checks) {
        if (c.pass()) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

GcsReport verify_gcs(const Gcs& g, double tol) {
    const Matrix& m = g.matrix();
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    const Matrix gram = inner_product_matrix(g.n());
    const Matrix gm = gram * m;

    const Matrix ul = g.upper_left();
    const Matrix ur = g.upper_right();
    const Matrix ll = g.lower_left();
    const Matrix lr = g.lower_right();
    const double block = std::max({max_abs(ur + ur.transpose()), max_abs(ll + ll.transpose()),
                                   max_abs(lr + ul.transpose())});

    GcsReport report;
    report.checks.push_back({"square", max_abs(m * m + id), tol});
    report.checks.push_back({"duality", max_abs(gm + gm.transpose()), tol});
    report.checks.push_back({"block_structure", block, tol});
    report.checks.push_back({"isometry", max_abs(m.transpose() * gram * m - gram), tol});
    // NaN residuals must fail.
    for (auto& c : report.checks) {
        if (std::isnan(c.residual)) c.residual = INFINITY;
    }
    return report;
}

int gcs_type(const Gcs& g, double rank_tol) {
    const auto report = verify_gcs(g);
    if (!report.all_pass()) {
        throw DomainError("gcs_type: matrix is not a generalized complex structure (violated: " +
                          report.failures() + ")");
    }
    Eigen::JacobiSVD<Matrix> svd(g.upper_right());
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    int rank = 0;
    if (smax > 0.0) {
        while (rank < s.size() && s(rank) > rank_tol * smax) ++rank;
    }
    if (rank % 2 != 0) {
        std::ostringstream os;
        os << "gcs_type: odd numerical rank " << rank << " of the upper-right block"
           << " (singular value gap " << s(rank - 1) << " -> "
           << (rank < s.size() ? s(rank) : 0.0) << ")";
        throw DomainError(os.str());
    }
    return g.n() - rank / 2;
}

}  // namespace gcfluct
