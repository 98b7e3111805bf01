#include "hmx/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "hmx/errors.hpp"

namespace hmx {

namespace {

Complex draw(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    const double im = u(rng);
    return {re, im};
}

double draw_real(Rng& rng, double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex unit_phase(Rng& rng) { return std::polar(1.0, draw_real(rng, 0.0, 2.0 * std::numbers::pi)); }

Hypermatrix param_matrix(std::size_t n, Rng& rng) { return random_hypermatrix({n, n}, rng); }

Hypermatrix symmetric_param(std::size_t n, Rng& rng) {
    Hypermatrix p = param_matrix(n, rng);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) p.at({i, j}) = p.at({j, i});
    return p;
}

}  // namespace

Hypermatrix random_hypermatrix(const Shape& shape, Rng& rng) {
    Hypermatrix h(shape);
    for (auto& e : h.entries()) e = draw(rng);
    return h;
}

Hypermatrix random_integer_hypermatrix(const Shape& shape, Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Hypermatrix h(shape);
    for (auto& e : h.entries()) e = static_cast<double>(d(rng));
    return h;
}

OperandList random_operands(std::size_t m, const Shape& out, std::size_t inner, Rng& rng,
                            bool integer) {
    if (out.size() != m) throw ShapeError("random_operands: output order must equal m");
    std::vector<Hypermatrix> ops;
    for (std::size_t p = 0; p < m; ++p) {
        Shape s = out;
        s[(p + 1) % m] = inner;
        ops.push_back(integer ? random_integer_hypermatrix(s, rng) : random_hypermatrix(s, rng));
    }
    return OperandList(std::move(ops));
}

Matrix random_matrix(std::size_t n, Rng& rng) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = draw(rng);
    return m;
}

Matrix random_real_matrix(std::size_t n, Rng& rng) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = draw_real(rng);
    return m;
}

Matrix random_hollow_symmetric(std::size_t n, Rng& rng) {
    const auto k = static_cast<Eigen::Index>(n);
    Matrix m = Matrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = i + 1; j < k; ++j) m(i, j) = m(j, i) = draw_real(rng);
    return m;
}

LiftedPair coupled_block_fixture(std::size_t n, double eps, Rng& rng) {
    const auto k = static_cast<Eigen::Index>(n);
    const Eigen::Index N = k * k;
    const SpectralPair p = eigen_decompose(random_matrix(n, rng));
    LiftedPair lp;
    lp.block_size = n;
    lp.U = Matrix::Identity(N, N);
    lp.V = Matrix::Identity(N, N);
    lp.U.topLeftCorner(k, k) = p.U;
    lp.V.topLeftCorner(k, k) = p.V;
    lp.mu = Vector::Ones(N);
    lp.nu = Vector::Ones(N);
    lp.mu.head(k) = p.mu;
    lp.nu.head(k) = p.nu;
    Matrix R(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) R(i, j) = draw(rng);
    return apply_change_of_basis(lp, Matrix::Identity(N, N) + eps * R);
}

Hypermatrix random_symmetric_222(Rng& rng) {
    const Complex w[4] = {draw(rng), draw(rng), draw(rng), draw(rng)};
    Hypermatrix A = Hypermatrix::cubic(3, 2);
    MultiIndex i(3, 0);
    do {
        A(i) = w[i[0] + i[1] + i[2]];
    } while (next_index(i, A.shape()));
    return A;
}

SymmetricConstruction symmetric_construction(Rng& rng) {
    const Hypermatrix r = param_matrix(2, rng);
    ComplexVector v{draw(rng), draw(rng)};
    // Normalize so that sum_t r(t0,t2) r(t1,t0) r(t2,t1) v_t0 v_t1 v_t2 = 1.
    Complex c = 0.0;
    for (std::size_t t0 = 0; t0 < 2; ++t0)
        for (std::size_t t1 = 0; t1 < 2; ++t1)
            for (std::size_t t2 = 0; t2 < 2; ++t2)
                c += r.at({t0, t2}) * r.at({t1, t0}) * r.at({t2, t1}) * v[t0] * v[t1] * v[t2];
    const Complex scale = std::pow(c, -1.0 / 3.0);
    for (auto& x : v) x *= scale;

    SymmetricConstruction s;
    s.Q = Hypermatrix::cubic(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t l = 0; l < 2; ++l)
            for (std::size_t k = 0; k < 2; ++k) s.Q.at({i, l, k}) = r.at({i, k}) * v[l];
    s.alpha = {Complex(draw_real(rng, 0.5, 1.5), draw_real(rng, -0.5, 0.5)),
               Complex(draw_real(rng, 0.5, 1.5), draw_real(rng, -0.5, 0.5))};
    Hypermatrix alpha({2, 2});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t l = 0; l < 2; ++l) alpha.at({i, l}) = s.alpha[i];
    const Hypermatrix S = apply_scaling(s.Q, scaling_hypermatrix(alpha));
    s.A = prod(S, cyclic_transpose(S, 2), cyclic_transpose(S));
    return s;
}

HyperSpectralTriple random_triple(std::size_t n, Rng& rng) {
    HyperSpectralTriple t;
    t.Q = random_hypermatrix({n, n, n}, rng);
    t.U = random_hypermatrix({n, n, n}, rng);
    t.V = random_hypermatrix({n, n, n}, rng);
    t.D1 = scaling_hypermatrix(symmetric_param(n, rng));
    t.D2 = scaling_hypermatrix(symmetric_param(n, rng));
    t.D3 = scaling_hypermatrix(symmetric_param(n, rng));
    return t;
}

Hypermatrix unit_phase_factor(std::size_t n, Rng& rng) {
    Hypermatrix Q = Hypermatrix::cubic(4, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) Q.at({a, b, c, a}) = unit_phase(rng);
    return Q;
}

SliceInvariantScaling real_product_scaling(std::size_t n, Rng& rng) {
    SliceInvariantScaling s;
    for (std::size_t l = 0; l < n; ++l) {
        const Complex lambda = draw(rng) + 1.5, gamma = draw(rng) + 1.5, theta = draw(rng) + 1.5;
        const double target = draw_real(rng, 0.5, 2.0);
        s.lambda.push_back(lambda);
        s.gamma.push_back(gamma);
        s.theta.push_back(theta);
        // conj(xi) = target / (lambda conj(gamma) theta)
        s.xi.push_back(std::conj(target / (lambda * std::conj(gamma) * theta)));
    }
    return s;
}

SliceInvariantScaling bounded_scaling(std::size_t n, Rng& rng, double lo, double hi) {
    SliceInvariantScaling s;
    for (auto* v : {&s.lambda, &s.gamma, &s.theta, &s.xi})
        for (std::size_t l = 0; l < n; ++l) v->push_back(draw_real(rng, lo, hi));
    return s;
}

ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexVector x(n);
    double norm = 0.0;
    for (auto& v : x) {
        const double re = g(rng);
        const double im = g(rng);
        v = {re, im};
        norm += std::norm(v);
    }
    norm = std::sqrt(norm);
    for (auto& v : x) v /= norm;
    return x;
}

std::vector<CorpusEntry> fixture_corpus(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CorpusEntry> c;
    auto add = [&](std::string name, Hypermatrix h, std::string what) {
        c.push_back({std::move(name), std::move(h), std::move(what)});
    };

    add("delta3_2", kronecker_delta(3, 2), "order-3 Kronecker delta, side 2");
    add("identity2", kronecker_delta(2, 2), "2 x 2 identity");
    Hypermatrix sym2({2, 2}, {2.0, 1.0, 1.0, 2.0});
    add("charpoly2_matrix", sym2, "[[2,1],[1,2]]");

    const OperandList ops = random_operands(3, {2, 2, 2}, 2, rng);
    for (std::size_t p = 0; p < 3; ++p)
        add("prod_a" + std::to_string(p + 1), ops[p], "random product operand");
    const OperandList iops = random_operands(3, {2, 3, 2}, 3, rng, true);
    for (std::size_t p = 0; p < 3; ++p)
        add("prod_int_a" + std::to_string(p + 1), iops[p], "integer product operand");

    for (std::size_t n : {3u, 4u}) {
        const Matrix A = random_matrix(n, rng);
        const std::string tag = "eig" + std::to_string(n);
        add(tag + "_A", from_matrix(A), "random complex matrix");
        const SpectralPair p = eigen_decompose(A);
        add(tag + "_U", from_matrix(p.U), "eigenvector factor U");
        add(tag + "_V", from_matrix(p.V), "eigenvector factor V");
        add(tag + "_mu", vector_hypermatrix(from_vector(p.mu)), "scaling vector mu");
        add(tag + "_nu", vector_hypermatrix(from_vector(p.nu)), "scaling vector nu");
    }
    add("hollow4", from_matrix(random_hollow_symmetric(4, rng)), "hollow symmetric matrix");

    for (int k = 0; k < 3; ++k)
        add("symmetric222_" + std::to_string(k), random_symmetric_222(rng),
            "fully symmetric 2 x 2 x 2");

    const SymmetricConstruction sc = symmetric_construction(rng);
    add("symelim_Q", sc.Q, "factor with stationary background sequence");
    add("symelim_A", sc.A, "hypermatrix built from symelim_Q with slice-invariant scaling");

    const HyperSpectralTriple t = random_triple(2, rng);
    add("triple_A", t.reconstruct(), "hypermatrix built from the triple_* factors");
    add("triple_Q", t.Q, "");
    add("triple_U", t.U, "");
    add("triple_V", t.V, "");
    add("triple_D1", t.D1, "");
    add("triple_D2", t.D2, "");
    add("triple_D3", t.D3, "");

    const Hypermatrix Q4 = unit_phase_factor(2, rng);
    const SliceInvariantScaling s = bounded_scaling(2, rng, 0.5, 2.0);
    add("hermitian_Q", Q4, "order-4 unitary factor");
    add("hermitian_A", unitary_reconstruction(Q4, s), "slice-invariant unitary reconstruction");
    add("hermitian_sym", hermitian_symmetrize(random_hypermatrix({2, 2, 2, 2}, rng)),
        "Hermitian symmetrization of a random order-4 hypermatrix");
    return c;
}

}  // namespace hmx
