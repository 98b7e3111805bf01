#pragma once

#include <cstddef>

#include "hmx/tensor_core.hpp"

namespace hmx {

/// Index patterns of the fourth-order scaling hypermatrices:
/// P1: delta(i1,i2) x(i1,i3); P2: delta(i1,i3) x(i1,i0); P3: delta(i1,i0) x(i1,i2).
enum class ScalingPattern { P1, P2, P3 };

struct ScalingHypermatrix4 {
    /// n x n order-2 parameter array.
    Hypermatrix param;
    ScalingPattern pattern = ScalingPattern::P1;

    Hypermatrix materialize() const;
};

/// One shared scaling vector per label. Entry l of each vector is the
/// scaling value attached to fiber l (the product over the three slice
/// indices, which no longer depends on them).
struct SliceInvariantScaling {
    ComplexVector lambda, gamma, theta, xi;
};

struct HermitianCheck {
    bool ok = false;
    /// ||conj(T(A)) - A||_F
    double residual = 0.0;
};

/// conj(cyclic_transpose(A)).
Hypermatrix hermitian_adjoint(const Hypermatrix& A);

/// Even order only; ok when residual <= 1e-12 * max(1, ||A||_F).
HermitianCheck is_hermitian(const Hypermatrix& A);

/// Sum of X over its orbit under A -> conj(T(A)); always Hermitian.
Hypermatrix hermitian_symmetrize(const Hypermatrix& X);

/// sum a[i0,i1,i2,i3] x[i0] conj(y[i1]) z[i2] conj(t[i3]).
Complex multilinear_form(const Hypermatrix& A, const ComplexVector& x, const ComplexVector& y,
                         const ComplexVector& z, const ComplexVector& t);

struct RealnessCheck {
    bool ok = false;
    double max_imag = 0.0;
    /// lambda o conj(gamma) o theta o conj(xi)
    ComplexVector product;
};

RealnessCheck theorem_realness_check(const SliceInvariantScaling& s, double tol = 1e-10);

struct RayleighBounds {
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
    bool holds = false;
};

/// mu^4 ||x||_4^4 <= Re <x, conj x, x, conj x>_A <= nu^4 ||x||_4^4.
RayleighBounds rayleigh_bounds(const Hypermatrix& A, const ComplexVector& x, double mu, double nu);

/// Max over (i0,i1,i2,i3) of |<q_{i0 i2 i3}, conj q_{i1 i3 i0}, q_{i2 i0 i1},
/// conj q_{i3 i1 i2}> - delta|. Q is order 4 with fibers on its last axis.
double unitarity_residual(const Hypermatrix& Q);

/// a[i0,i1,i2,i3] = sum_l lambda_l q_{i0 i2 i3,l} conj(gamma_l q_{i1 i3 i0,l})
/// theta_l q_{i2 i0 i1,l} conj(xi_l q_{i3 i1 i2,l}).
Hypermatrix unitary_reconstruction(const Hypermatrix& Q, const SliceInvariantScaling& s);

/// ||unitary_reconstruction(Q, s) - A||_F
double unitary_reconstruction_residual(const Hypermatrix& A, const Hypermatrix& Q,
                                       const SliceInvariantScaling& s);

/// Materializes the slice-invariant scaling as a ScalingHypermatrix4 parameter
/// array: param(i, l) = v_l for every i.
Hypermatrix slice_invariant_param(const ComplexVector& v);

}  // namespace hmx
