#include "hmx/linalg.hpp"

#include <limits>

#include "hmx/errors.hpp"

namespace hmx {

Matrix to_matrix(const Hypermatrix& h) {
    if (h.order() != 2) throw ShapeError("expected an order-2 hypermatrix");
    const auto r = static_cast<Eigen::Index>(h.extent(0));
    const auto c = static_cast<Eigen::Index>(h.extent(1));
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = h[static_cast<std::size_t>(i * c + j)];
    return m;
}

Hypermatrix from_matrix(const Matrix& m) {
    Hypermatrix h({static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())});
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            h[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
    return h;
}

Vector to_vector(const ComplexVector& v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

ComplexVector from_vector(const Vector& v) { return ComplexVector(v.data(), v.data() + v.size()); }

Hypermatrix vector_hypermatrix(const ComplexVector& v) { return Hypermatrix({v.size()}, v); }

ComplexVector hypermatrix_vector(const Hypermatrix& h) {
    if (h.order() != 1) throw ShapeError("expected an order-1 hypermatrix");
    return ComplexVector(h.entries().begin(), h.entries().end());
}

Complex determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1.0;
    return Eigen::PartialPivLU<Matrix>(m).determinant();
}

Matrix pseudo_inverse(const Matrix& m, double rel_cutoff) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cutoff = s.size() ? rel_cutoff * s(0) : 0.0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cutoff && s(i) > 0.0) inv(i) = 1.0 / s(i);
    const Eigen::Index r = s.size();
    return svd.matrixV().leftCols(r) * inv.cast<Complex>().asDiagonal() *
           svd.matrixU().leftCols(r).adjoint();
}

double condition_number(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 1.0;
    const double lo = s(s.size() - 1);
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / lo;
}

}  // namespace hmx
