#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hmx/linalg.hpp"
#include "hmx/residual_report.hpp"

namespace hmx {

inline constexpr double kDefaultBiorthogonalityTol = 1e-10;
inline constexpr double kDefaultReconstructionTol = 1e-10;

/// A = (U diag(mu)) (V diag(nu))^H with U V^H = I. The eigenvalues are
/// mu o conj(nu).
struct SpectralPair {
    Matrix U;
    Matrix V;
    Vector mu;
    Vector nu;
    /// Condition estimate of the eigenvector matrix (1 when not computed).
    double condition = 1.0;
    bool near_defective = false;

    Matrix reconstruct() const;
    Vector eigenvalues() const;
    std::size_t size() const { return static_cast<std::size_t>(U.rows()); }
};

/// Decomposition of a larger N x N matrix whose leading block_size x
/// block_size block is the decomposed matrix.
struct LiftedPair {
    Matrix U;
    Matrix V;
    Vector mu;
    Vector nu;
    std::size_t block_size = 0;

    Matrix reconstruct() const;
    Matrix leading_block() const;
    std::size_t size() const { return static_cast<std::size_t>(U.rows()); }
};

/// ||U V^H - I||_F.
double biorthogonality_residual(const Matrix& U, const Matrix& V);
/// ||reconstruct - A||_F / ||A||_F (absolute when A = 0).
double reconstruction_residual(const SpectralPair& p, const Matrix& A);
ResidualReport spectral_residuals(const SpectralPair& p, const Matrix& A,
                                  double tol_bio = kDefaultBiorthogonalityTol,
                                  double tol_rec = kDefaultReconstructionTol);

/// Canonical split mu = eigenvalues, nu = 1; columns of V have unit norm and
/// U = (V^H)^{-1}. Eigenvalues are ordered by descending modulus, then real
/// part, then imaginary part.
SpectralPair eigen_decompose(const Matrix& A);

/// A masked to the entries (j1, j2) and (j2, j1); requires j1 < j2 < n.
Matrix pair_minor(const Matrix& A, std::size_t j1, std::size_t j2);

/// Weighted minor avoiding vertex tau; the n minors sum to A. Requires n >= 3.
Matrix tau_minor(const Matrix& A, std::size_t tau);

struct PartitionCheck {
    bool exact = true;
    double max_deviation = 0.0;
    /// Entries of A not reproduced by the sum of minors.
    std::vector<std::pair<std::size_t, std::size_t>> uncovered;
};

/// Compares the sum of all pair minors to A entry by entry.
PartitionCheck check_pair_partition(const Matrix& A);

/// Decomposition of tau_minor(A, tau) restricted to the complement of tau:
/// row tau and the last column are zero and U V^H = I - e_tau e_tau^T.
SpectralPair decompose_tau_minor(const Matrix& A, std::size_t tau);

/// Decomposition of pair_minor(A, j1, j2) on its 2 x 2 support, embedded in
/// n columns (the last n - 2 are zero) so U V^H = e_j1 e_j1^T + e_j2 e_j2^T.
SpectralPair decompose_pair_minor(const Matrix& A, std::size_t j1, std::size_t j2);

/// Embeds a decomposition of a principal submatrix (rows `keep`) into n x n
/// factors; extra columns and scaling entries are zero.
SpectralPair embed_pair(const SpectralPair& sub, std::span<const std::size_t> keep, std::size_t n);

/// Concatenates embedded minor decompositions whose projectors U V^H sum to
/// (n - 1) I, then completes the factors to N x N with exact
/// biorthogonality. N = n * minors.size().
LiftedPair lift(std::span<const SpectralPair> minors, std::size_t n);

/// lift() over the n tau-minors of A; N = n^2.
LiftedPair lift_tau_minors(const Matrix& A);

/// lift() over the C(n,2) pair minors of a hollow A; N = n * C(n,2).
LiftedPair lift_pair_minors(const Matrix& A);

struct Truncation {
    /// sum_{k<n} mu_k (P u_k)(nu_k P v_k)^H with P the leading-coordinate projector.
    Matrix approx;
    /// First term: ||sum_{k>=n} (mu_k u_k)(nu_k v_k)^H||_F^2.
    double tail_term_sq = 0.0;
    /// Second term: ||sum_{k<n} (mu_k u_k o m)(nu_k v_k o m)^H||_F^2, m the
    /// trailing-coordinate mask.
    double mask_term_sq = 0.0;
    double error_bound_sq = 0.0;
    double error_bound = 0.0;
    /// ||lifted reconstruction - embed(approx)||_F^2, computed directly.
    double distance_sq = 0.0;
    /// Factors of `approx`: leading n rows of the first n columns.
    SpectralPair leading;
};

Truncation truncate(const LiftedPair& lp);

struct InflationOptions {
    std::size_t max_iterations = 5000;
    double objective_tol = 1e-12;
    double rel_decrease_tol = 1e-10;
    double armijo_c = 1e-4;
    double backtrack = 0.5;
    double initial_step = 1.0;
    std::size_t max_backtracks = 60;
    double max_condition = 1e8;
};

struct InflationResult {
    SpectralPair pair;
    LiftedPair lifted;
    /// Objective at the start and after every accepted step.
    std::vector<double> trace;
    std::size_t iterations = 0;
    bool converged = false;
    double objective = 0.0;
    /// Largest ||U V^H - I||_F seen during the run.
    double max_biorthogonality_drift = 0.0;
};

/// Objective of the inflation descent: off-block mass of both factors plus
/// the deviation of the reconstruction's diagonal blocks from
/// blockdiag(target, I).
double inflation_objective(const LiftedPair& lp, const Matrix& target);

/// Gradient of inflation_objective with respect to W at W = I, where the
/// factors move as U W and V W^{-H}. Entry (i,j) is d/dRe + i d/dIm of W(i,j).
Matrix inflation_gradient(const LiftedPair& lp, const Matrix& target);

/// U <- U W, V <- V W^{-H}; preserves U V^H.
LiftedPair apply_change_of_basis(const LiftedPair& lp, const Matrix& W);

/// Gradient descent with Armijo backtracking over the change of basis W.
/// The target block is the initial leading block of `lp`. Throws
/// ConvergenceError when a step's W exceeds max_condition.
InflationResult inflate(const LiftedPair& lp, const InflationOptions& opts = {});

enum class ApproximationMethod { Truncate, Inflate };

struct RecursiveOptions {
    std::size_t depth_floor = 2;
    ApproximationMethod method = ApproximationMethod::Truncate;
    InflationOptions inflation{};
};

struct Approximation {
    SpectralPair pair;
    ResidualReport report;
};

/// Builds a decomposition of A from decompositions of its tau-minors,
/// recursing until the minor size reaches depth_floor.
/// Report entries: "reconstruction", "biorthogonality" and, for comparison,
/// "baseline_reconstruction" of eigen_decompose(A).
Approximation recursive_approximate(const Matrix& A, const RecursiveOptions& opts = {});

/// Sets V = (U^{-1})^H so U V^H = I exactly. Columns of U whose weight
/// mu_k conj(nu_k) vanishes and that make U singular are first replaced by
/// an orthonormal basis of the complement of the remaining columns. Throws
/// ConvergenceError when U stays singular.
SpectralPair rebiorthogonalize(SpectralPair p);

}  // namespace hmx
