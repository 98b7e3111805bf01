#include "hmx/hyper_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmx/bm_algebra.hpp"
#include "hmx/errors.hpp"

namespace hmx {

namespace {

void require_cubic3(const Hypermatrix& X, const char* what) {
    if (X.order() != 3 || !X.is_cubic())
        throw ShapeError(std::string(what) + ": expected a cubic order-3 hypermatrix");
}

void require_222(const Hypermatrix& X, const char* what) {
    if (X.order() != 3 || X.shape() != Shape{2, 2, 2})
        throw ShapeError(std::string(what) + ": expected a 2 x 2 x 2 hypermatrix");
}

Hypermatrix T(const Hypermatrix& X, std::size_t times = 1) { return cyclic_transpose(X, times); }

}  // namespace

DiagonalAnalogCheck is_diagonal_analog(const Hypermatrix& D) {
    require_cubic3(D, "is_diagonal_analog");
    const Hypermatrix lhs = hadamard(hadamard(D, D), D);
    const Hypermatrix rhs = prod(T(D), T(D, 2), D);
    DiagonalAnalogCheck c;
    c.residual = frobenius_norm(lhs - rhs);
    const double scale = std::pow(frobenius_norm(D), 3);
    c.ok = c.residual <= 1e-10 * scale;
    return c;
}

Hypermatrix scaling_hypermatrix(const Hypermatrix& alpha) {
    if (alpha.order() != 2 || !alpha.is_cubic())
        throw ShapeError("scaling_hypermatrix: expected a square order-2 parameter array");
    const std::size_t n = alpha.extent(0);
    Hypermatrix D = Hypermatrix::cubic(3, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) D.at({i, l, l}) = alpha.at({i, l});
    return D;
}

Hypermatrix apply_scaling(const Hypermatrix& X, const Hypermatrix& D) { return prod(X, D, T(D)); }

Hypermatrix HyperSpectralTriple::reconstruct() const {
    return prod(apply_scaling(Q, D3), T(apply_scaling(U, D2), 2), T(apply_scaling(V, D1)));
}

ResidualReport decomposition_residual(const Hypermatrix& A, const HyperSpectralTriple& t) {
    require_cubic3(A, "decomposition_residual");
    const std::size_t n = A.side();
    for (const Hypermatrix* X : {&t.Q, &t.U, &t.V, &t.D1, &t.D2, &t.D3}) {
        require_cubic3(*X, "decomposition_residual");
        if (X->side() != n) throw ShapeError("decomposition_residual: side mismatch");
    }
    ResidualReport r;
    r.add("reconstruction", frobenius_norm(t.reconstruct() - A));
    r.add("non_correlation",
          frobenius_norm(prod(t.Q, T(t.U, 2), T(t.V)) - kronecker_delta(3, n)));
    return r;
}

ComplexVector char_poly_222(const Hypermatrix& A, const ScalingValues222& s) {
    require_222(A, "char_poly_222");
    auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return A.at({i, j, k}); };
    const Complex odd1 = a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    const Complex odd2 = a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0);
    const Complex constant = a(0, 0, 0) * odd2 - odd1 * a(1, 1, 1);
    const Complex s11 = s.s(1, 1), s01 = s.s(0, 1), s00 = s.s(0, 0);
    return {odd1 * s11 * s11 - odd2 * s01 * s01 + constant,
            odd1 * s01 * s01 - odd2 * s00 * s00 + constant};
}

Hypermatrix inner_product_form(const Hypermatrix& Q, const Hypermatrix& U, const Hypermatrix& V,
                               const ScalingValues222& s) {
    require_222(Q, "inner_product_form");
    require_222(U, "inner_product_form");
    require_222(V, "inner_product_form");
    Hypermatrix out = Hypermatrix::cubic(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                Complex acc = 0.0;
                for (std::size_t l = 0; l < 2; ++l)
                    acc += s.alpha[i][l] * Q.at({i, l, k}) * s.alpha[k][l] * s.beta[j][l] *
                           U.at({j, l, i}) * s.beta[i][l] * s.gamma[k][l] * V.at({k, l, j}) *
                           s.gamma[j][l];
                out.at({i, j, k}) = acc;
            }
    return out;
}

BackgroundSequence background_sequence(const Hypermatrix& Q, const Hypermatrix& U,
                                       const Hypermatrix& V, std::size_t steps) {
    require_cubic3(Q, "background_sequence");
    const std::size_t n = Q.side();
    const OperandList ops({Q, T(U, 2), T(V)});
    BackgroundSequence seq;
    seq.G.push_back(kronecker_delta(3, n));
    for (std::size_t k = 0; k < steps; ++k) seq.G.push_back(general_bm_product(ops, seq.G.back()));
    return seq;
}

SymmetricElimination symmetric_elimination(const Hypermatrix& A, const Hypermatrix& Q,
                                           std::size_t levels) {
    require_222(A, "symmetric_elimination");
    require_222(Q, "symmetric_elimination");
    if (levels == 0) throw DomainError("symmetric_elimination: levels must be positive");
    const double a_norm = frobenius_norm(A);
    if (frobenius_norm(T(A) - A) > 1e-12 * std::max(1.0, a_norm))
        throw DomainError("symmetric_elimination: A is not invariant under cyclic transpose");

    static constexpr std::array<std::array<std::size_t, 3>, 4> reps{
        {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
    const BackgroundSequence seq = background_sequence(Q, Q, Q, levels);

    SymmetricElimination out;
    for (std::size_t k = 0; k < levels; ++k) {
        const Hypermatrix& G = seq.G[k + 1];
        // Diagonal system diag(G_rep) m = a_rep; Cramer gives m_w = a_w / G_w.
        Complex det = 1.0;
        double scale = 1.0;
        for (const auto& r : reps) {
            det *= G.at({r[0], r[1], r[2]});
            scale *= std::max(frobenius_norm(G), 1e-300);
        }
        if (!(std::abs(det) > 1e-12 * scale))
            throw SingularSystemError("symmetric_elimination: level " + std::to_string(k) +
                                          " scaling system is singular",
                                      std::abs(det));
        std::array<Complex, 4> m{};
        for (std::size_t w = 0; w < 4; ++w) {
            const auto& r = reps[w];
            m[w] = A.at({r[0], r[1], r[2]}) / G.at({r[0], r[1], r[2]});
        }
        out.monomials.push_back(m);

        auto relative = [](Complex lhs, Complex rhs) {
            const double s = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
            return std::abs(lhs - rhs) / s;
        };
        const std::string level = "level" + std::to_string(k);
        out.report.add(level + ".t1", relative(m[1] * m[1] * m[1], m[0] * m[0] * m[3]));
        out.report.add(level + ".t2", relative(m[2] * m[2] * m[2], m[0] * m[3] * m[3]));

        Hypermatrix fitted = G;
        MultiIndex idx(3, 0);
        do {
            const std::size_t w = idx[0] + idx[1] + idx[2];
            fitted(idx) *= m[w];
        } while (next_index(idx, fitted.shape()));
        const double diff = frobenius_norm(A - fitted);
        out.report.add(level + ".consistency", a_norm > 0.0 ? diff / a_norm : diff);
    }
    return out;
}

ResidualReport symmetric_elimination_residual(const Hypermatrix& A, const Hypermatrix& Q,
                                              std::size_t levels) {
    return symmetric_elimination(A, Q, levels).report;
}

Hypermatrix triple_minor(const Hypermatrix& A, std::size_t j1, std::size_t j2, std::size_t j3) {
    require_cubic3(A, "triple_minor");
    const std::size_t n = A.side();
    if (!(j1 < j2 && j2 < j3)) throw IndexError("triple_minor: requires j1 < j2 < j3");
    if (j3 >= n) throw IndexError("triple_minor: index out of range");
    Hypermatrix out = Hypermatrix::cubic(3, n);
    std::array<std::size_t, 3> p{j1, j2, j3};
    do {
        out(p) = A(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

TriplePartitionCheck check_triple_partition(const Hypermatrix& A) {
    require_cubic3(A, "check_triple_partition");
    const std::size_t n = A.side();
    Hypermatrix sum = Hypermatrix::cubic(3, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) sum += triple_minor(A, a, b, c);
    TriplePartitionCheck check;
    MultiIndex idx(3, 0);
    do {
        const double d = std::abs(sum(idx) - A(idx));
        if (d != 0.0) {
            check.exact = false;
            check.uncovered.push_back(idx);
        }
        check.max_deviation = std::max(check.max_deviation, d);
    } while (next_index(idx, A.shape()));
    return check;
}

}  // namespace hmx
