#include "hmx/matrix_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "hmx/errors.hpp"

namespace hmx {

namespace {

constexpr double kNearDefectiveCondition = 1e8;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_square(const Matrix& A, const char* what) {
    if (A.rows() != A.cols() || A.rows() == 0)
        throw ShapeError(std::string(what) + ": expected a non-empty square matrix");
}

Vector scaling_product(const Vector& mu, const Vector& nu) {
    return mu.cwiseProduct(nu.conjugate());
}

/// Descending modulus, then real, then imaginary part. Moduli within a
/// relative 1e-12 of each other count as tied.
std::vector<Eigen::Index> spectral_order(const Vector& lambda) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(lambda.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    const double scale = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
    const double tie = 1e-12 * std::max(scale, 1e-300);
    auto before = [&](Eigen::Index a, Eigen::Index b) {
        const Complex x = lambda(a), y = lambda(b);
        if (std::abs(std::abs(x) - std::abs(y)) > tie) return std::abs(x) > std::abs(y);
        if (std::abs(x.real() - y.real()) > tie) return x.real() > y.real();
        if (std::abs(x.imag() - y.imag()) > tie) return x.imag() > y.imag();
        return false;
    };
    std::stable_sort(order.begin(), order.end(), before);
    return order;
}

}  // namespace

Matrix SpectralPair::reconstruct() const {
    return U * scaling_product(mu, nu).asDiagonal() * V.adjoint();
}

Vector SpectralPair::eigenvalues() const { return scaling_product(mu, nu); }

Matrix LiftedPair::reconstruct() const {
    return U * scaling_product(mu, nu).asDiagonal() * V.adjoint();
}

Matrix LiftedPair::leading_block() const {
    const auto n = idx(block_size);
    return U.topRows(n) * scaling_product(mu, nu).asDiagonal() * V.topRows(n).adjoint();
}

double biorthogonality_residual(const Matrix& U, const Matrix& V) {
    return (U * V.adjoint() - Matrix::Identity(U.rows(), U.rows())).norm();
}

double reconstruction_residual(const SpectralPair& p, const Matrix& A) {
    const double diff = (p.reconstruct() - A).norm();
    const double scale = A.norm();
    return scale > 0.0 ? diff / scale : diff;
}

ResidualReport spectral_residuals(const SpectralPair& p, const Matrix& A, double tol_bio,
                                  double tol_rec) {
    ResidualReport r;
    r.add("reconstruction", reconstruction_residual(p, A), tol_rec);
    r.add("biorthogonality", biorthogonality_residual(p.U, p.V), tol_bio);
    r.add("condition", condition_number(p.U));
    return r;
}

namespace {

bool numerically_singular(const Matrix& U) {
    Eigen::JacobiSVD<Matrix> svd(U);
    const auto& s = svd.singularValues();
    return s.size() > 0 && !(s(s.size() - 1) > 1e-12 * s(0));
}

void complete_weightless_columns(SpectralPair& p) {
    const Eigen::Index n = p.U.cols();
    const Vector d = scaling_product(p.mu, p.nu);
    const double wmax = d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
    std::vector<Eigen::Index> free, kept;
    for (Eigen::Index k = 0; k < n; ++k)
        (std::abs(d(k)) <= 1e-14 * std::max(wmax, 1e-300) ? free : kept).push_back(k);
    if (free.empty()) return;
    Matrix K(p.U.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) K.col(static_cast<Eigen::Index>(c)) = p.U.col(kept[c]);
    Eigen::JacobiSVD<Matrix> svd(K, Eigen::ComputeFullU);
    const Eigen::Index r = static_cast<Eigen::Index>(kept.size());
    for (std::size_t c = 0; c < free.size() && r + static_cast<Eigen::Index>(c) < n; ++c)
        p.U.col(free[c]) = svd.matrixU().col(r + static_cast<Eigen::Index>(c));
}

}  // namespace

SpectralPair rebiorthogonalize(SpectralPair p) {
    if (numerically_singular(p.U)) complete_weightless_columns(p);
    Eigen::FullPivLU<Matrix> lu(p.U);
    if (!lu.isInvertible() || numerically_singular(p.U))
        throw ConvergenceError("eigenvector matrix is singular (defective input)");
    p.V = lu.inverse().adjoint();
    return p;
}

SpectralPair eigen_decompose(const Matrix& A) {
    require_square(A, "eigen_decompose");
    Eigen::ComplexEigenSolver<Matrix> es(A, true);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eigen_decompose: eigensolver did not converge");
    const auto order = spectral_order(es.eigenvalues());
    const Eigen::Index n = A.rows();

    SpectralPair p;
    p.U.resize(n, n);
    p.mu.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        p.U.col(k) = es.eigenvectors().col(order[static_cast<std::size_t>(k)]);
        p.mu(k) = es.eigenvalues()(order[static_cast<std::size_t>(k)]);
    }
    p.nu = Vector::Ones(n);
    p.condition = condition_number(p.U);
    p.near_defective = !(p.condition <= kNearDefectiveCondition);
    p = rebiorthogonalize(std::move(p));
    // Unit columns of V; the paired U column absorbs the scale.
    for (Eigen::Index k = 0; k < n; ++k) {
        const double s = p.V.col(k).norm();
        if (s > 0.0) {
            p.V.col(k) /= s;
            p.U.col(k) *= s;
        }
    }
    return p;
}

Matrix pair_minor(const Matrix& A, std::size_t j1, std::size_t j2) {
    require_square(A, "pair_minor");
    const auto n = static_cast<std::size_t>(A.rows());
    if (j1 >= n || j2 >= n) throw IndexError("pair_minor: index out of range");
    if (j1 >= j2) throw IndexError("pair_minor: requires j1 < j2");
    Matrix out = Matrix::Zero(A.rows(), A.cols());
    out(idx(j1), idx(j2)) = A(idx(j1), idx(j2));
    out(idx(j2), idx(j1)) = A(idx(j2), idx(j1));
    return out;
}

Matrix tau_minor(const Matrix& A, std::size_t tau) {
    require_square(A, "tau_minor");
    const auto n = static_cast<std::size_t>(A.rows());
    if (n < 3) throw DomainError("tau_minor: unsupported size n < 3");
    if (tau >= n) throw IndexError("tau_minor: tau out of range");
    const double off = 1.0 / static_cast<double>(n - 2);
    const double diag = 1.0 / static_cast<double>(n - 1);
    Matrix out = Matrix::Zero(A.rows(), A.cols());
    for (std::size_t i = 0; i < n; ++i) {
        if (i == tau) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == tau) continue;
            out(idx(i), idx(j)) = A(idx(i), idx(j)) * (i == j ? diag : off);
        }
    }
    return out;
}

PartitionCheck check_pair_partition(const Matrix& A) {
    require_square(A, "check_pair_partition");
    const auto n = static_cast<std::size_t>(A.rows());
    Matrix sum = Matrix::Zero(A.rows(), A.cols());
    for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < n; ++j2) sum += pair_minor(A, j1, j2);
    PartitionCheck check;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double d = std::abs(sum(idx(i), idx(j)) - A(idx(i), idx(j)));
            if (d != 0.0) {
                check.exact = false;
                check.uncovered.emplace_back(i, j);
            }
            check.max_deviation = std::max(check.max_deviation, d);
        }
    return check;
}

SpectralPair embed_pair(const SpectralPair& sub, std::span<const std::size_t> keep, std::size_t n) {
    const auto m = static_cast<std::size_t>(sub.U.rows());
    if (keep.size() != m || m > n) throw ShapeError("embed_pair: row map does not match the pair");
    SpectralPair p;
    p.U = Matrix::Zero(idx(n), idx(n));
    p.V = Matrix::Zero(idx(n), idx(n));
    p.mu = Vector::Zero(idx(n));
    p.nu = Vector::Zero(idx(n));
    for (std::size_t r = 0; r < m; ++r) {
        if (keep[r] >= n) throw IndexError("embed_pair: row index out of range");
        p.U.row(idx(keep[r])).head(idx(m)) = sub.U.row(idx(r));
        p.V.row(idx(keep[r])).head(idx(m)) = sub.V.row(idx(r));
    }
    p.mu.head(idx(m)) = sub.mu;
    p.nu.head(idx(m)) = sub.nu;
    p.condition = sub.condition;
    p.near_defective = sub.near_defective;
    return p;
}

namespace {

std::vector<std::size_t> complement_of(std::size_t tau, std::size_t n) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != tau) keep.push_back(i);
    return keep;
}

Matrix principal_submatrix(const Matrix& A, std::span<const std::size_t> keep) {
    Matrix s(idx(keep.size()), idx(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) s(idx(r), idx(c)) = A(idx(keep[r]), idx(keep[c]));
    return s;
}

}  // namespace

SpectralPair decompose_tau_minor(const Matrix& A, std::size_t tau) {
    const Matrix minor = tau_minor(A, tau);
    const auto keep = complement_of(tau, static_cast<std::size_t>(A.rows()));
    return embed_pair(eigen_decompose(principal_submatrix(minor, keep)), keep,
                      static_cast<std::size_t>(A.rows()));
}

SpectralPair decompose_pair_minor(const Matrix& A, std::size_t j1, std::size_t j2) {
    const Matrix minor = pair_minor(A, j1, j2);
    const std::size_t keep[2] = {j1, j2};
    return embed_pair(eigen_decompose(principal_submatrix(minor, keep)), keep,
                      static_cast<std::size_t>(A.rows()));
}

LiftedPair lift(std::span<const SpectralPair> minors, std::size_t n) {
    if (n < 2) throw DomainError("lift: block size must be at least 2");
    if (minors.empty()) throw DomainError("lift: no minor decompositions given");
    const std::size_t count = minors.size();
    const std::size_t N = n * count;
    const double root = std::sqrt(static_cast<double>(n - 1));

    Matrix RU(idx(n), idx(N)), RV(idx(n), idx(N));
    Vector mu(idx(N)), nu(idx(N));
    for (std::size_t m = 0; m < count; ++m) {
        const auto& p = minors[m];
        if (p.size() != n || static_cast<std::size_t>(p.mu.size()) != n)
            throw ShapeError("lift: minor decomposition " + std::to_string(m) + " is not " +
                             std::to_string(n) + " x " + std::to_string(n));
        RU.middleCols(idx(m * n), idx(n)) = p.U / root;
        RV.middleCols(idx(m * n), idx(n)) = p.V / root;
        mu.segment(idx(m * n), idx(n)) = p.mu * root;
        nu.segment(idx(m * n), idx(n)) = p.nu * root;
    }
    const double lead = (RU * RV.adjoint() - Matrix::Identity(idx(n), idx(n))).norm();
    if (!(lead <= 1e-8))
        throw DomainError("lift: minor projectors do not sum to (n-1) I (leading-row residual " +
                          std::to_string(lead) + ")");

    // Completion rows of U span the orthogonal complement of the leading rows of V.
    Eigen::JacobiSVD<Matrix> svd(RV.conjugate(), Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-12 * s(0)) ++rank;
    if (rank < static_cast<int>(n))
        throw LiftError("lift: leading row block is rank deficient", rank);

    LiftedPair lp;
    lp.block_size = n;
    lp.U.resize(idx(N), idx(N));
    lp.U.topRows(idx(n)) = RU;
    lp.U.bottomRows(idx(N - n)) = svd.matrixV().rightCols(idx(N - n)).transpose();
    Eigen::PartialPivLU<Matrix> lu(lp.U);
    lp.V = lu.inverse().adjoint();
    lp.mu = mu;
    lp.nu = nu;
    return lp;
}

LiftedPair lift_tau_minors(const Matrix& A) {
    require_square(A, "lift_tau_minors");
    const auto n = static_cast<std::size_t>(A.rows());
    std::vector<SpectralPair> minors;
    for (std::size_t tau = 0; tau < n; ++tau) minors.push_back(decompose_tau_minor(A, tau));
    return lift(minors, n);
}

LiftedPair lift_pair_minors(const Matrix& A) {
    require_square(A, "lift_pair_minors");
    const auto n = static_cast<std::size_t>(A.rows());
    std::vector<SpectralPair> minors;
    for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < n; ++j2) minors.push_back(decompose_pair_minor(A, j1, j2));
    return lift(minors, n);
}

Truncation truncate(const LiftedPair& lp) {
    const auto N = static_cast<Eigen::Index>(lp.size());
    const auto n = static_cast<Eigen::Index>(lp.block_size);
    if (n <= 0 || n > N || lp.V.rows() != N || lp.mu.size() != N || lp.nu.size() != N)
        throw ShapeError("truncate: inconsistent lifted pair");
    const Vector d = scaling_product(lp.mu, lp.nu);

    Truncation t;
    t.approx = lp.U.topLeftCorner(n, n) * d.head(n).asDiagonal() * lp.V.topLeftCorner(n, n).adjoint();
    const Matrix tail = lp.U.rightCols(N - n) * d.tail(N - n).asDiagonal() * lp.V.rightCols(N - n).adjoint();
    const Matrix masked = lp.U.bottomLeftCorner(N - n, n) * d.head(n).asDiagonal() *
                          lp.V.bottomLeftCorner(N - n, n).adjoint();
    t.tail_term_sq = tail.squaredNorm();
    t.mask_term_sq = masked.squaredNorm();
    t.error_bound_sq = t.tail_term_sq + t.mask_term_sq;
    t.error_bound = std::sqrt(t.error_bound_sq);

    Matrix diff = lp.reconstruct();
    diff.topLeftCorner(n, n) -= t.approx;
    t.distance_sq = diff.squaredNorm();

    t.leading.U = lp.U.topLeftCorner(n, n);
    t.leading.V = lp.V.topLeftCorner(n, n);
    t.leading.mu = lp.mu.head(n);
    t.leading.nu = lp.nu.head(n);
    return t;
}

Approximation recursive_approximate(const Matrix& A, const RecursiveOptions& opts) {
    require_square(A, "recursive_approximate");
    const auto n = static_cast<std::size_t>(A.rows());
    if (n < 2) throw DomainError("recursive_approximate: n must be at least 2");
    if (opts.depth_floor < 2 || opts.depth_floor > n)
        throw DomainError("recursive_approximate: depth_floor must lie in [2, n]");

    Approximation out;
    if (n <= opts.depth_floor) {
        out.pair = eigen_decompose(A);
    } else {
        std::vector<SpectralPair> minors;
        for (std::size_t tau = 0; tau < n; ++tau) {
            const auto keep = complement_of(tau, n);
            const Matrix sub = principal_submatrix(tau_minor(A, tau), keep);
            RecursiveOptions inner = opts;
            inner.depth_floor = std::min(opts.depth_floor, n - 1);
            SpectralPair sp = rebiorthogonalize(recursive_approximate(sub, inner).pair);
            minors.push_back(embed_pair(sp, keep, n));
        }
        const LiftedPair lp = lift(minors, n);
        if (opts.method == ApproximationMethod::Truncate) {
            out.pair = rebiorthogonalize(truncate(lp).leading);
        } else {
            out.pair = rebiorthogonalize(inflate(lp, opts.inflation).pair);
        }
    }
    out.report.add("reconstruction", reconstruction_residual(out.pair, A));
    out.report.add("biorthogonality", biorthogonality_residual(out.pair.U, out.pair.V),
                   kDefaultBiorthogonalityTol);
    out.report.add("baseline_reconstruction", reconstruction_residual(eigen_decompose(A), A));
    return out;
}

}  // namespace hmx
