#include <cmath>
#include <string>

#include "hmx/errors.hpp"
#include "hmx/matrix_spectral.hpp"

namespace hmx {

namespace {

struct Masks {
    Eigen::MatrixXd block;  // 1 on the two diagonal blocks
    Eigen::MatrixXd off;    // 1 on the coupling blocks
};

Masks masks_for(const LiftedPair& lp) {
    const auto N = static_cast<Eigen::Index>(lp.size());
    const auto n = static_cast<Eigen::Index>(lp.block_size);
    Masks m;
    m.block = Eigen::MatrixXd::Zero(N, N);
    m.block.topLeftCorner(n, n).setOnes();
    m.block.bottomRightCorner(N - n, N - n).setOnes();
    m.off = Eigen::MatrixXd::Ones(N, N) - m.block;
    return m;
}

Matrix masked(const Eigen::MatrixXd& mask, const Matrix& X) {
    return mask.cast<Complex>().cwiseProduct(X);
}

Matrix block_target(const LiftedPair& lp, const Matrix& target) {
    const auto N = static_cast<Eigen::Index>(lp.size());
    const auto n = static_cast<Eigen::Index>(lp.block_size);
    if (target.rows() != n || target.cols() != n)
        throw ShapeError("inflation: target block must be " + std::to_string(n) + " x " +
                         std::to_string(n));
    Matrix J = Matrix::Identity(N, N);
    J.topLeftCorner(n, n) = target;
    return J;
}

void check_lifted(const LiftedPair& lp) {
    const auto N = static_cast<Eigen::Index>(lp.size());
    if (lp.block_size == 0 || static_cast<Eigen::Index>(lp.block_size) > N || lp.U.cols() != N ||
        lp.V.rows() != N || lp.V.cols() != N || lp.mu.size() != N || lp.nu.size() != N)
        throw ShapeError("inflation: inconsistent lifted pair");
}

double frob_condition(const Matrix& W, const Matrix& Winv) { return W.norm() * Winv.norm(); }

}  // namespace

double inflation_objective(const LiftedPair& lp, const Matrix& target) {
    check_lifted(lp);
    const Masks m = masks_for(lp);
    const Matrix R = lp.reconstruct() - block_target(lp, target);
    return masked(m.off, lp.U).squaredNorm() + masked(m.off, lp.V).squaredNorm() +
           masked(m.block, R).squaredNorm();
}

Matrix inflation_gradient(const LiftedPair& lp, const Matrix& target) {
    check_lifted(lp);
    const Masks m = masks_for(lp);
    const Vector d = lp.mu.cwiseProduct(lp.nu.conjugate());
    const Matrix X = masked(m.block, lp.reconstruct() - block_target(lp, target));
    const Matrix Z = lp.U.adjoint() * X * lp.V;
    const auto Dh = d.conjugate().asDiagonal();
    Matrix G = lp.U.adjoint() * masked(m.off, lp.U) - masked(m.off, lp.V).adjoint() * lp.V;
    G += Z * Dh;
    G -= Dh * Z;
    return 2.0 * G;
}

LiftedPair apply_change_of_basis(const LiftedPair& lp, const Matrix& W) {
    check_lifted(lp);
    if (W.rows() != lp.U.cols() || W.cols() != lp.U.cols())
        throw ShapeError("apply_change_of_basis: W has the wrong size");
    Eigen::PartialPivLU<Matrix> lu(W);
    LiftedPair out = lp;
    out.U = lp.U * W;
    out.V = lp.V * lu.inverse().adjoint();
    return out;
}

InflationResult inflate(const LiftedPair& lp, const InflationOptions& opts) {
    check_lifted(lp);
    const Matrix target = lp.leading_block();
    const auto N = static_cast<Eigen::Index>(lp.size());
    const auto n = static_cast<Eigen::Index>(lp.block_size);

    InflationResult res;
    res.lifted = lp;
    double f = inflation_objective(lp, target);
    res.trace.push_back(f);
    res.max_biorthogonality_drift = biorthogonality_residual(lp.U, lp.V);

    double step = opts.initial_step;
    while (true) {
        if (f < opts.objective_tol) {
            res.converged = true;
            break;
        }
        if (res.iterations >= opts.max_iterations) break;

        const Matrix g = inflation_gradient(res.lifted, target);
        const double gg = g.squaredNorm();
        if (gg == 0.0) {
            res.converged = true;
            break;
        }

        bool accepted = false;
        LiftedPair trial;
        double f_new = f;
        double alpha = step;
        for (std::size_t b = 0; b <= opts.max_backtracks; ++b, alpha *= opts.backtrack) {
            const Matrix W = Matrix::Identity(N, N) - alpha * g;
            Eigen::PartialPivLU<Matrix> lu(W);
            const Matrix Winv = lu.inverse();
            if (!std::isfinite(Winv.norm())) continue;
            trial = res.lifted;
            trial.U = res.lifted.U * W;
            trial.V = res.lifted.V * Winv.adjoint();
            f_new = inflation_objective(trial, target);
            if (std::isfinite(f_new) && f_new <= f - opts.armijo_c * alpha * gg) {
                const double cond = frob_condition(W, Winv) / static_cast<double>(N);
                if (cond > opts.max_condition)
                    throw ConvergenceError("inflate: change of basis condition " +
                                           std::to_string(cond) + " exceeds limit");
                accepted = true;
                break;
            }
        }
        if (!accepted) break;

        ++res.iterations;
        res.lifted = std::move(trial);
        res.max_biorthogonality_drift = std::max(
            res.max_biorthogonality_drift, biorthogonality_residual(res.lifted.U, res.lifted.V));
        res.trace.push_back(f_new);
        const double decrease = (f - f_new) / f;
        f = f_new;
        // Let the step grow back after a successful line search.
        step = std::min(opts.initial_step, 2.0 * alpha);
        if (decrease < opts.rel_decrease_tol) {
            res.converged = true;
            break;
        }
    }

    res.objective = f;
    res.pair.U = res.lifted.U.topLeftCorner(n, n);
    res.pair.V = res.lifted.V.topLeftCorner(n, n);
    res.pair.mu = res.lifted.mu.head(n);
    res.pair.nu = res.lifted.nu.head(n);
    res.pair.condition = condition_number(res.pair.U);
    res.pair.near_defective = !(res.pair.condition <= 1e8);
    return res;
}

}  // namespace hmx
