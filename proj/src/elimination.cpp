#include "hmx/elimination.hpp"

#include <cmath>
#include <string>

#include "hmx/errors.hpp"

namespace hmx {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_square(const Matrix& A, const char* what) {
    if (A.rows() != A.cols() || A.rows() == 0)
        throw ShapeError(std::string(what) + ": expected a non-empty square matrix");
}

void require_index(std::size_t i, std::size_t n, const char* what) {
    if (i >= n) throw IndexError(std::string(what) + ": index " + std::to_string(i) + " out of range");
}

}  // namespace

PowerStack::PowerStack(const Matrix& A) : A_(A), n_(static_cast<std::size_t>(A.rows())) {
    require_square(A, "PowerStack");
    powers_.reserve(n_);
    powers_.push_back(Matrix::Identity(A.rows(), A.cols()));
    for (std::size_t k = 1; k < n_; ++k) powers_.push_back(powers_.back() * A_);
}

Vector PowerStack::column(std::size_t i, std::size_t j) const {
    require_index(i, n_, "PowerStack");
    require_index(j, n_, "PowerStack");
    Vector out(idx(n_));
    for (std::size_t k = 0; k < n_; ++k) out(idx(k)) = powers_[k](idx(i), idx(j));
    return out;
}

Matrix vandermonde_matrix(const Vector& spectrum) {
    const Eigen::Index n = spectrum.size();
    Matrix V(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        Complex p = 1.0;
        for (Eigen::Index k = 0; k < n; ++k) {
            V(k, l) = p;
            p *= spectrum(l);
        }
    }
    return V;
}

bool spectrum_distinct(const Vector& spectrum, double rel) {
    const Eigen::Index n = spectrum.size();
    if (n < 2) return true;
    const double thresh = rel * spectrum.cwiseAbs().maxCoeff();
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = a + 1; b < n; ++b)
            if (!(std::abs(spectrum(a) - spectrum(b)) > thresh)) return false;
    return true;
}

HadamardRowProducts hadamard_row_products(const Matrix& A, const Vector& spectrum) {
    require_square(A, "hadamard_row_products");
    const auto n = static_cast<std::size_t>(A.rows());
    if (static_cast<std::size_t>(spectrum.size()) != n)
        throw ShapeError("hadamard_row_products: spectrum length must equal n");
    const PowerStack stack(A);
    const Matrix Vd = vandermonde_matrix(spectrum);

    HadamardRowProducts out;
    out.n = n;
    out.degenerate = !spectrum_distinct(spectrum);
    Matrix rhs(idx(n), idx(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs.col(idx(n * i + j)) = stack.column(i, j);
    const Matrix sol = out.degenerate ? Matrix(pseudo_inverse(Vd) * rhs)
                                      : Matrix(Eigen::PartialPivLU<Matrix>(Vd).solve(rhs));
    out.w.reserve(n * n);
    for (std::size_t c = 0; c < n * n; ++c) out.w.emplace_back(sol.col(idx(c)));
    return out;
}

GeneratorResidual mu_nu_generator_residual(const Matrix& A, const Vector& spectrum, std::size_t i,
                                           std::size_t j) {
    const auto n = static_cast<std::size_t>(A.rows());
    require_index(i, n, "mu_nu_generator_residual");
    require_index(j, n, "mu_nu_generator_residual");
    const auto w = hadamard_row_products(A, spectrum);

    GeneratorResidual r;
    r.degenerate = w.degenerate;
    r.raw = w(i, j).cwiseProduct(w(j, i)) - w(i, i).cwiseProduct(w(j, j));
    const Complex dv = determinant(vandermonde_matrix(spectrum));
    r.polynomial = -(dv * dv) * r.raw;
    const double scale = A.squaredNorm();
    r.normalized = scale > 0.0 ? Vector(r.raw / scale) : r.raw;
    return r;
}

Complex char_poly_2x2(const Matrix& A, Complex lambda) {
    if (A.rows() != 2 || A.cols() != 2) throw ShapeError("char_poly_2x2: expected a 2 x 2 matrix");
    const Complex tr = A(0, 0) + A(1, 1);
    const Complex det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    return lambda * lambda - tr * lambda + det;
}

ParsevalSystem build_parseval_system(const Matrix& U, const Matrix& V, const Matrix& A) {
    require_square(A, "build_parseval_system");
    const auto n = static_cast<std::size_t>(A.rows());
    if (U.rows() != A.rows() || U.cols() != A.cols() || V.rows() != A.rows() || V.cols() != A.cols())
        throw ShapeError("build_parseval_system: U, V and A must share one square shape");
    // inner(j1, j0) = sum_k u_{j1,k} conj(v_{j0,k})
    const Matrix inner = U * V.adjoint();

    ParsevalSystem ps;
    ps.n = n;
    ps.F.resize(idx(n * n), idx(n * n));
    ps.a_vec.resize(idx(n * n));
    for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1) {
            ps.a_vec(idx(n * i0 + i1)) = A(idx(i0), idx(i1));
            for (std::size_t j0 = 0; j0 < n; ++j0)
                for (std::size_t j1 = 0; j1 < n; ++j1)
                    ps.F(idx(n * i0 + i1), idx(n * j0 + j1)) =
                        U(idx(i0), idx(j0)) * inner(idx(j1), idx(j0)) *
                        std::conj(V(idx(i1), idx(j1)));
        }
    return ps;
}

Vector parseval_unknowns(const Vector& mu, const Vector& nu) {
    if (mu.size() != nu.size()) throw ShapeError("parseval_unknowns: mu and nu differ in length");
    const Eigen::Index n = mu.size();
    Vector x(n * n);
    for (Eigen::Index j0 = 0; j0 < n; ++j0)
        for (Eigen::Index j1 = 0; j1 < n; ++j1) x(n * j0 + j1) = mu(j0) * std::conj(nu(j1));
    return x;
}

Matrix cramer_substitute(const ParsevalSystem& ps, std::size_t k) {
    require_index(k, static_cast<std::size_t>(ps.F.cols()), "cramer_substitute");
    Matrix Fk = ps.F;
    Fk.col(idx(k)) = ps.a_vec;
    return Fk;
}

namespace {

/// Singular when sigma_min <= 1e-12 sigma_max.
bool singular(const Matrix& F) {
    Eigen::JacobiSVD<Matrix> svd(F);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return false;
    return !(s(s.size() - 1) > 1e-12 * s(0));
}

}  // namespace

UVResidual uv_generator_evaluate(const ParsevalSystem& ps, std::size_t i, std::size_t j) {
    const std::size_t n = ps.n;
    require_index(i, n, "uv_generator_residual");
    require_index(j, n, "uv_generator_residual");
    if (i >= j) throw IndexError("uv_generator_residual: requires i < j");
    UVResidual r;
    r.det_F = determinant(ps.F);
    // det(F_a F_b) = det(F_a) det(F_b)
    r.numerator = determinant(cramer_substitute(ps, n * i + i)) *
                      determinant(cramer_substitute(ps, n * j + j)) -
                  determinant(cramer_substitute(ps, n * i + j)) *
                      determinant(cramer_substitute(ps, n * j + i));
    if (!singular(ps.F)) r.value = r.numerator / (r.det_F * r.det_F);
    return r;
}

Complex uv_generator_residual(const ParsevalSystem& ps, std::size_t i, std::size_t j) {
    const UVResidual r = uv_generator_evaluate(ps, i, j);
    if (!r.value)
        throw SingularSystemError("uv_generator_residual: Parseval system is singular",
                                  std::abs(r.det_F));
    return *r.value;
}

Vector cramer_solve(const ParsevalSystem& ps) {
    const Complex d = determinant(ps.F);
    if (singular(ps.F))
        throw SingularSystemError("cramer_solve: Parseval system is singular", std::abs(d));
    Vector x(ps.F.cols());
    for (Eigen::Index k = 0; k < ps.F.cols(); ++k)
        x(k) = determinant(cramer_substitute(ps, static_cast<std::size_t>(k))) / d;
    return x;
}

}  // namespace hmx
