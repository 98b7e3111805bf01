#include <array>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "hmx/errors.hpp"
#include "hmx/hyper_spectral.hpp"

namespace hmx {

namespace {

// Unknown layout: Q, U, V (8 each, flat row-major), then alpha, beta, gamma
// (4 each, [i][l]).
constexpr int kQ = 0, kU = 8, kV = 16, kAlpha = 24, kBeta = 28, kGamma = 32, kUnknowns = 36;
constexpr int kEquations = 16;

int cube(std::size_t a, std::size_t b, std::size_t c) { return static_cast<int>(4 * a + 2 * b + c); }
int pair(std::size_t i, std::size_t l) { return static_cast<int>(2 * i + l); }

struct Term {
    std::array<int, 9> vars{};
    int count = 0;
};

/// Factor lists: equation e, fiber l -> unknown indices whose product is the
/// term. Equations 0..7 are the scaled constraints, 8..15 non-correlation.
std::array<std::array<Term, 2>, kEquations> build_terms() {
    std::array<std::array<Term, 2>, kEquations> t{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                const int e = cube(i, j, k);
                for (std::size_t l = 0; l < 2; ++l) {
                    t[e][l] = {{kAlpha + pair(i, l), kQ + cube(i, l, k), kAlpha + pair(k, l),
                                kBeta + pair(j, l), kU + cube(j, l, i), kBeta + pair(i, l),
                                kGamma + pair(k, l), kV + cube(k, l, j), kGamma + pair(j, l)},
                               9};
                    t[8 + e][l] = {{kQ + cube(i, l, k), kU + cube(j, l, i), kV + cube(k, l, j)}, 3};
                }
            }
    return t;
}

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

struct System {
    std::array<std::array<Term, 2>, kEquations> terms = build_terms();
    CVec target = CVec::Zero(kEquations);

    CVec residual(const CVec& z) const {
        CVec r = -target;
        for (int e = 0; e < kEquations; ++e)
            for (const Term& term : terms[e]) {
                Complex p = 1.0;
                for (int f = 0; f < term.count; ++f) p *= z(term.vars[f]);
                r(e) += p;
            }
        return r;
    }

    CMat jacobian(const CVec& z) const {
        CMat J = CMat::Zero(kEquations, kUnknowns);
        for (int e = 0; e < kEquations; ++e)
            for (const Term& term : terms[e])
                for (int f = 0; f < term.count; ++f) {
                    Complex p = 1.0;
                    for (int g = 0; g < term.count; ++g)
                        if (g != f) p *= z(term.vars[g]);
                    J(e, term.vars[f]) += p;
                }
        return J;
    }
};

ScalingSolution unpack(const CVec& z) {
    ScalingSolution s;
    s.Q = Hypermatrix::cubic(3, 2);
    s.U = Hypermatrix::cubic(3, 2);
    s.V = Hypermatrix::cubic(3, 2);
    for (std::size_t f = 0; f < 8; ++f) {
        s.Q[f] = z(kQ + static_cast<int>(f));
        s.U[f] = z(kU + static_cast<int>(f));
        s.V[f] = z(kV + static_cast<int>(f));
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t l = 0; l < 2; ++l) {
            s.scaling.alpha[i][l] = z(kAlpha + pair(i, l));
            s.scaling.beta[i][l] = z(kBeta + pair(i, l));
            s.scaling.gamma[i][l] = z(kGamma + pair(i, l));
        }
    return s;
}

}  // namespace

ScalingSolution solve_scaling_222(const Hypermatrix& A, const ScalingSolveOptions& opts) {
    if (A.order() != 3 || A.shape() != Shape{2, 2, 2})
        throw ShapeError("solve_scaling_222: expected a 2 x 2 x 2 hypermatrix");
    if (opts.starts == 0) throw DomainError("solve_scaling_222: at least one start is required");

    System sys;
    for (std::size_t f = 0; f < 8; ++f) sys.target(static_cast<int>(f)) = A[f];
    sys.target(8 + cube(0, 0, 0)) = 1.0;
    sys.target(8 + cube(1, 1, 1)) = 1.0;

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    ScalingSolution best;
    best.residual = std::numeric_limits<double>::infinity();
    for (std::size_t start = 0; start < opts.starts; ++start) {
        CVec z(kUnknowns);
        for (int u = 0; u < kUnknowns; ++u) z(u) = Complex(normal(rng), normal(rng));
        CVec r = sys.residual(z);
        double cost = r.squaredNorm();
        double damping = 1e-3;
        std::size_t it = 0;
        for (; it < opts.max_iterations && std::sqrt(cost) >= opts.tolerance; ++it) {
            const CMat J = sys.jacobian(z);
            // Underdetermined Gauss-Newton step in its minimum-norm form.
            const CMat JJ = J * J.adjoint();
            bool improved = false;
            for (int attempt = 0; attempt < 30; ++attempt) {
                CMat M = JJ;
                M.diagonal().array() += damping * (1.0 + JJ.diagonal().real().maxCoeff());
                const CVec step = -J.adjoint() * M.ldlt().solve(r);
                const CVec trial = z + step;
                const CVec rt = sys.residual(trial);
                const double c = rt.squaredNorm();
                if (std::isfinite(c) && c < cost) {
                    z = trial;
                    r = rt;
                    cost = c;
                    damping = std::max(damping * 0.3, 1e-15);
                    improved = true;
                    break;
                }
                damping *= 10.0;
            }
            if (!improved) break;
        }
        const double res = std::sqrt(cost);
        if (res < best.residual) {
            best = unpack(z);
            best.residual = res;
            best.start = start;
            best.iterations = it;
        }
        if (res < opts.tolerance) break;
    }
    best.converged = best.residual < opts.tolerance;
    return best;
}

}  // namespace hmx
