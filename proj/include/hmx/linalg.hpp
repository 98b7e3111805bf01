#pragma once

#include <Eigen/Dense>

#include "hmx/tensor_core.hpp"

namespace hmx {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Order-2 hypermatrix to matrix; throws ShapeError otherwise.
Matrix to_matrix(const Hypermatrix& h);
Hypermatrix from_matrix(const Matrix& m);
Vector to_vector(const ComplexVector& v);
ComplexVector from_vector(const Vector& v);
/// Order-1 hypermatrix holding v.
Hypermatrix vector_hypermatrix(const ComplexVector& v);
ComplexVector hypermatrix_vector(const Hypermatrix& h);

/// Determinant by LU with partial pivoting.
Complex determinant(const Matrix& m);

/// Moore-Penrose pseudoinverse via SVD, discarding singular values below
/// `rel_cutoff * sigma_max`.
Matrix pseudo_inverse(const Matrix& m, double rel_cutoff = 1e-12);

/// 2-norm condition number (sigma_max / sigma_min); infinity when singular.
double condition_number(const Matrix& m);

}  // namespace hmx
