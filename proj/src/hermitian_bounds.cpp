#include "hmx/hermitian_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmx/errors.hpp"

namespace hmx {

namespace {

void require_order4_cubic(const Hypermatrix& A, const char* what) {
    if (A.order() != 4 || !A.is_cubic())
        throw ShapeError(std::string(what) + ": expected a cubic order-4 hypermatrix");
}

void require_length(const ComplexVector& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw ShapeError(std::string(what) + ": expected vectors of length " + std::to_string(n));
}

struct Fibers {
    const Hypermatrix& Q;
    std::size_t len;

    Complex operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t l) const {
        return Q.at({a, b, c, l});
    }
};

Fibers fibers_of(const Hypermatrix& Q, const char* what) {
    if (Q.order() != 4) throw ShapeError(std::string(what) + ": expected an order-4 factor");
    const std::size_t n = Q.extent(0);
    if (Q.extent(1) != n || Q.extent(2) != n)
        throw ShapeError(std::string(what) + ": the three slice axes must share one side");
    return {Q, Q.extent(3)};
}

}  // namespace

Hypermatrix ScalingHypermatrix4::materialize() const {
    if (param.order() != 2 || !param.is_cubic())
        throw ShapeError("ScalingHypermatrix4: parameter must be a square order-2 array");
    const std::size_t n = param.extent(0);
    Hypermatrix out = Hypermatrix::cubic(4, n);
    MultiIndex i(4, 0);
    do {
        switch (pattern) {
        case ScalingPattern::P1:
            if (i[1] == i[2]) out(i) = param.at({i[1], i[3]});
            break;
        case ScalingPattern::P2:
            if (i[1] == i[3]) out(i) = param.at({i[1], i[0]});
            break;
        case ScalingPattern::P3:
            if (i[1] == i[0]) out(i) = param.at({i[1], i[2]});
            break;
        }
    } while (next_index(i, out.shape()));
    return out;
}

Hypermatrix hermitian_adjoint(const Hypermatrix& A) { return conj(cyclic_transpose(A)); }

HermitianCheck is_hermitian(const Hypermatrix& A) {
    if (A.order() == 0 || A.order() % 2 != 0)
        throw DomainError("is_hermitian: Hermicity is defined for even orders only");
    if (!A.is_cubic()) throw ShapeError("is_hermitian: expected a cubic hypermatrix");
    HermitianCheck c;
    c.residual = frobenius_norm(hermitian_adjoint(A) - A);
    c.ok = c.residual <= 1e-12 * std::max(1.0, frobenius_norm(A));
    return c;
}

Hypermatrix hermitian_symmetrize(const Hypermatrix& X) {
    if (X.order() == 0 || X.order() % 2 != 0)
        throw DomainError("hermitian_symmetrize: even order required");
    if (!X.is_cubic()) throw ShapeError("hermitian_symmetrize: expected a cubic hypermatrix");
    Hypermatrix sum = X;
    Hypermatrix term = X;
    for (std::size_t t = 1; t < X.order(); ++t) {
        term = hermitian_adjoint(term);
        sum += term;
    }
    return sum;
}

Complex multilinear_form(const Hypermatrix& A, const ComplexVector& x, const ComplexVector& y,
                         const ComplexVector& z, const ComplexVector& t) {
    require_order4_cubic(A, "multilinear_form");
    const std::size_t n = A.extent(0);
    for (const auto* v : {&x, &y, &z, &t}) require_length(*v, n, "multilinear_form");
    Complex acc = 0.0;
    std::size_t flat = 0;
    for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1) {
            const Complex w01 = x[i0] * std::conj(y[i1]);
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                const Complex w012 = w01 * z[i2];
                for (std::size_t i3 = 0; i3 < n; ++i3) acc += A[flat++] * w012 * std::conj(t[i3]);
            }
        }
    return acc;
}

RealnessCheck theorem_realness_check(const SliceInvariantScaling& s, double tol) {
    const std::size_t n = s.lambda.size();
    for (const auto* v : {&s.gamma, &s.theta, &s.xi}) require_length(*v, n, "theorem_realness_check");
    RealnessCheck c;
    c.product.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        c.product[l] = s.lambda[l] * std::conj(s.gamma[l]) * s.theta[l] * std::conj(s.xi[l]);
        c.max_imag = std::max(c.max_imag, std::abs(c.product[l].imag()));
    }
    c.ok = c.max_imag <= tol;
    return c;
}

RayleighBounds rayleigh_bounds(const Hypermatrix& A, const ComplexVector& x, double mu, double nu) {
    if (!(mu > 0.0) || !(mu <= nu))
        throw DomainError("rayleigh_bounds: requires 0 < mu <= nu");
    double l4 = 0.0;
    for (const Complex& v : x) l4 += std::pow(std::norm(v), 2);
    RayleighBounds b;
    b.value = multilinear_form(A, x, x, x, x).real();
    b.lower = std::pow(mu, 4) * l4;
    b.upper = std::pow(nu, 4) * l4;
    b.holds = b.lower <= b.value && b.value <= b.upper;
    return b;
}

double unitarity_residual(const Hypermatrix& Q) {
    const Fibers q = fibers_of(Q, "unitarity_residual");
    const std::size_t n = Q.extent(0);
    double worst = 0.0;
    for (std::size_t i0 = 0; i0 < n; ++i0)
        for (std::size_t i1 = 0; i1 < n; ++i1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t i3 = 0; i3 < n; ++i3) {
                    Complex acc = 0.0;
                    for (std::size_t l = 0; l < q.len; ++l)
                        acc += q(i0, i2, i3, l) * std::conj(q(i1, i3, i0, l)) * q(i2, i0, i1, l) *
                               std::conj(q(i3, i1, i2, l));
                    const double delta = (i0 == i1 && i1 == i2 && i2 == i3) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(acc - delta));
                }
    return worst;
}

Hypermatrix unitary_reconstruction(const Hypermatrix& Q, const SliceInvariantScaling& s) {
    const Fibers q = fibers_of(Q, "unitary_reconstruction");
    for (const auto* v : {&s.lambda, &s.gamma, &s.theta, &s.xi})
        require_length(*v, q.len, "unitary_reconstruction");
    const std::size_t n = Q.extent(0);
    Hypermatrix A = Hypermatrix::cubic(4, n);
    MultiIndex i(4, 0);
    do {
        Complex acc = 0.0;
        for (std::size_t l = 0; l < q.len; ++l)
            acc += s.lambda[l] * q(i[0], i[2], i[3], l) *
                   std::conj(s.gamma[l] * q(i[1], i[3], i[0], l)) * s.theta[l] *
                   q(i[2], i[0], i[1], l) * std::conj(s.xi[l] * q(i[3], i[1], i[2], l));
        A(i) = acc;
    } while (next_index(i, A.shape()));
    return A;
}

double unitary_reconstruction_residual(const Hypermatrix& A, const Hypermatrix& Q,
                                       const SliceInvariantScaling& s) {
    const Hypermatrix R = unitary_reconstruction(Q, s);
    require_same_shape(R, A, "unitary_reconstruction_residual");
    return frobenius_norm(R - A);
}

Hypermatrix slice_invariant_param(const ComplexVector& v) {
    const std::size_t n = v.size();
    Hypermatrix p({n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) p.at({i, l}) = v[l];
    return p;
}

}  // namespace hmx
