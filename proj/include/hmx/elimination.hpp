#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hmx/linalg.hpp"

namespace hmx {

/// Entry (i,j) of the powers A^0 .. A^{n-1}.
class PowerStack {
public:
    explicit PowerStack(const Matrix& A);

    std::size_t size() const noexcept { return n_; }
    const Matrix& matrix() const noexcept { return A_; }
    const Matrix& power(std::size_t k) const { return powers_.at(k); }
    /// ([A^0]_{ij}, ..., [A^{n-1}]_{ij}).
    Vector column(std::size_t i, std::size_t j) const;

private:
    Matrix A_;
    std::size_t n_;
    std::vector<Matrix> powers_;
};

/// Vandermonde matrix with entry (k, l) = spectrum_l^k.
Matrix vandermonde_matrix(const Vector& spectrum);

/// True when every pair of entries is separated by more than
/// rel * max|spectrum|.
bool spectrum_distinct(const Vector& spectrum, double rel = 1e-8);

struct HadamardRowProducts {
    std::size_t n = 0;
    /// w[n*i + j] estimates u_i o conj(v_j) (rows of U and V).
    std::vector<Vector> w;
    /// Set when the spectrum is degenerate and the pseudoinverse was used.
    bool degenerate = false;

    const Vector& operator()(std::size_t i, std::size_t j) const { return w.at(n * i + j); }
};

HadamardRowProducts hadamard_row_products(const Matrix& A, const Vector& spectrum);

struct GeneratorResidual {
    /// (w_ij o w_ji) - (w_ii o w_jj).
    Vector raw;
    /// -det(Vandermonde)^2 * raw: the same generator with denominators cleared.
    /// For n = 2 component t equals char_poly_2x2(A, spectrum_{1-t}).
    Vector polynomial;
    /// raw / ||A||_F^2.
    Vector normalized;
    bool degenerate = false;
};

GeneratorResidual mu_nu_generator_residual(const Matrix& A, const Vector& spectrum, std::size_t i,
                                           std::size_t j);

/// lambda^2 - tr(A) lambda + det(A).
Complex char_poly_2x2(const Matrix& A, Complex lambda);

struct ParsevalSystem {
    /// F(n*i0 + i1, n*j0 + j1) = u_{i0,j0} (sum_k conj(v_{j0,k}) u_{j1,k}) conj(v_{i1,j1}),
    /// so that F x = a_vec.
    Matrix F;
    Vector a_vec;
    std::size_t n = 0;
};

ParsevalSystem build_parseval_system(const Matrix& U, const Matrix& V, const Matrix& A);

/// Vector x with x[n*j0 + j1] = mu_j0 conj(nu_j1).
Vector parseval_unknowns(const Vector& mu, const Vector& nu);

/// F with column k replaced by a_vec.
Matrix cramer_substitute(const ParsevalSystem& ps, std::size_t k);

struct UVResidual {
    /// det(F_ii) det(F_jj) - det(F_ij) det(F_ji), with ii = n*i+i etc.
    Complex numerator;
    Complex det_F;
    /// numerator / det(F)^2 when F is nonsingular.
    std::optional<Complex> value;
};

/// Evaluates the Cramer-rule generator for the pair i < j. `value` is empty
/// when F is singular (sigma_min <= 1e-12 sigma_max).
UVResidual uv_generator_evaluate(const ParsevalSystem& ps, std::size_t i, std::size_t j);

/// The rational residual; throws SingularSystemError carrying |det F| when F
/// is singular.
Complex uv_generator_residual(const ParsevalSystem& ps, std::size_t i, std::size_t j);

/// x_k = det(F_k) / det(F) for every k; throws SingularSystemError when F is
/// singular.
Vector cramer_solve(const ParsevalSystem& ps);

}  // namespace hmx
