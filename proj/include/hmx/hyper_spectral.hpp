#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hmx/residual_report.hpp"
#include "hmx/tensor_core.hpp"

namespace hmx {

struct DiagonalAnalogCheck {
    bool ok = false;
    /// ||D o D o D - Prod(D^T, D^{T^2}, D)||_F
    double residual = 0.0;
};

/// Third-order diagonality constraint; threshold 1e-10 * ||D||_F^3.
DiagonalAnalogCheck is_diagonal_analog(const Hypermatrix& D);

/// D[i,l,j] = delta(l,j) * alpha(i,l), so Prod(X, D, D^T)[i,l,k] =
/// alpha(i,l) X[i,l,k] alpha(k,l). `alpha` is an n x n order-2 hypermatrix.
/// D is a diagonal analog exactly when alpha is symmetric.
Hypermatrix scaling_hypermatrix(const Hypermatrix& alpha);

/// Prod(X, D, D^T).
Hypermatrix apply_scaling(const Hypermatrix& X, const Hypermatrix& D);

struct HyperSpectralTriple {
    Hypermatrix Q, U, V;
    Hypermatrix D1, D2, D3;

    /// Prod(Prod(Q,D3,D3^T), [Prod(U,D2,D2^T)]^{T^2}, [Prod(V,D1,D1^T)]^T).
    Hypermatrix reconstruct() const;
    std::size_t side() const { return Q.extent(0); }
};

/// Entries "reconstruction" (||reconstruct - A||_F) and "non_correlation"
/// (||Prod(Q, U^{T^2}, V^T) - Delta||_F).
ResidualReport decomposition_residual(const Hypermatrix& A, const HyperSpectralTriple& t);

/// Scaling parameters of a 2 x 2 x 2 decomposition; alpha[i][l] is entry l of
/// the vector alpha_i.
struct ScalingValues222 {
    std::array<std::array<Complex, 2>, 2> alpha{};
    std::array<std::array<Complex, 2>, 2> beta{};
    std::array<std::array<Complex, 2>, 2> gamma{};

    /// alpha[i][l] * beta[i][l] * gamma[i][l]
    Complex s(std::size_t i, std::size_t l) const {
        return alpha.at(i).at(l) * beta.at(i).at(l) * gamma.at(i).at(l);
    }
};

/// Explicit two-component characteristic-polynomial generator for 2 x 2 x 2
/// hypermatrices, evaluated at the scaling values.
ComplexVector char_poly_222(const Hypermatrix& A, const ScalingValues222& s);

/// Inner-product form a_ijk = sum_l (alpha_i q_ik alpha_k)_l (beta_j u_ji beta_i)_l
/// (gamma_k v_kj gamma_j)_l, with q_ik the fiber Q[i,:,k] (likewise u_ji, v_kj).
Hypermatrix inner_product_form(const Hypermatrix& Q, const Hypermatrix& U, const Hypermatrix& V,
                               const ScalingValues222& s);

struct ScalingSolveOptions {
    std::size_t starts = 16;
    std::size_t max_iterations = 400;
    double tolerance = 1e-8;
    std::uint64_t seed = 0x5eed;
};

struct ScalingSolution {
    ScalingValues222 scaling;
    Hypermatrix Q, U, V;
    /// Euclidean norm of all constraint residuals at the returned point.
    double residual = 0.0;
    bool converged = false;
    std::size_t start = 0;
    std::size_t iterations = 0;
};

/// Damped least-squares solve of the 2 x 2 x 2 inner-product constraints
/// together with <q_ik, u_ji, v_kj> = delta_ijk, from `starts` seeded random
/// points. Returns the first start whose residual is below tolerance, or the
/// best one found.
ScalingSolution solve_scaling_222(const Hypermatrix& A, const ScalingSolveOptions& opts = {});

struct BackgroundSequence {
    std::vector<Hypermatrix> G;
};

/// G_0 = Delta, G_{k+1} = Prod_{G_k}(Q, U^{T^2}, V^T); returns steps + 1 terms.
BackgroundSequence background_sequence(const Hypermatrix& Q, const Hypermatrix& U,
                                       const Hypermatrix& V, std::size_t steps);

struct SymmetricElimination {
    /// Per level k, the monomials m_w (w = number of ones in the index) of the
    /// slice-invariant scaling, solved from representatives 000, 001, 011, 111.
    std::vector<std::array<Complex, 4>> monomials;
    ResidualReport report;
};

/// Symmetric case Q = U = V with one slice-invariant scaling alpha_i. At level
/// k the constraint reads A = M o G_{k+1} with M_ijk = (alpha_i alpha_j alpha_k)^2,
/// which is diagonal in the four monomials; Cramer's rule isolates them and
/// the tautologies m1^3 = m0^2 m3 and m2^3 = m0 m3^2 are evaluated.
/// Residual names: "level<k>.t1", "level<k>.t2" (relative), and
/// "level<k>.consistency" (||A - M o G_{k+1}||_F / ||A||_F).
SymmetricElimination symmetric_elimination(const Hypermatrix& A, const Hypermatrix& Q,
                                           std::size_t levels = 2);

ResidualReport symmetric_elimination_residual(const Hypermatrix& A, const Hypermatrix& Q,
                                              std::size_t levels = 2);

/// A masked to the entries whose index is a permutation of (j1, j2, j3);
/// requires j1 < j2 < j3 < n.
Hypermatrix triple_minor(const Hypermatrix& A, std::size_t j1, std::size_t j2, std::size_t j3);

struct TriplePartitionCheck {
    bool exact = true;
    double max_deviation = 0.0;
    std::vector<MultiIndex> uncovered;
};

/// Compares the sum of all triple minors to A entry by entry.
TriplePartitionCheck check_triple_partition(const Hypermatrix& A);

}  // namespace hmx
