#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hmx/bm_algebra.hpp"
#include "hmx/hermitian_bounds.hpp"
#include "hmx/hyper_spectral.hpp"
#include "hmx/linalg.hpp"
#include "hmx/matrix_spectral.hpp"

namespace hmx {

/// Seeded generators for test inputs and constructed decompositions. Every
/// function draws only from the generator it is handed.
using Rng = std::mt19937_64;

/// Entries with real and imaginary parts uniform in [-1, 1).
Hypermatrix random_hypermatrix(const Shape& shape, Rng& rng);
/// Real integer entries uniform in [lo, hi].
Hypermatrix random_integer_hypermatrix(const Shape& shape, Rng& rng, int lo = -3, int hi = 3);

/// Operands for an m-operand product with the given output shape and inner
/// dimension.
OperandList random_operands(std::size_t m, const Shape& out, std::size_t inner, Rng& rng,
                            bool integer = false);

Matrix random_matrix(std::size_t n, Rng& rng);
Matrix random_real_matrix(std::size_t n, Rng& rng);
/// Real symmetric with zero diagonal.
Matrix random_hollow_symmetric(std::size_t n, Rng& rng);

/// Block-diagonal pair for blockdiag(A, I) with A random n x n, then coupled
/// by the change of basis I + eps R (R random, N = n^2).
LiftedPair coupled_block_fixture(std::size_t n, double eps, Rng& rng);

/// Fully symmetric 2 x 2 x 2 hypermatrix (entries depend on the index multiset).
Hypermatrix random_symmetric_222(Rng& rng);

struct SymmetricConstruction {
    Hypermatrix Q;
    /// alpha[i]: slice-invariant scaling of index i.
    ComplexVector alpha;
    Hypermatrix A;
};

/// Q[i,l,k] = r(i,k) v(l) with v normalized so the background sequence is
/// stationary after one step, and A = Prod(S, S^{T^2}, S^T) with
/// S[i,l,k] = alpha_i Q[i,l,k] alpha_k.
SymmetricConstruction symmetric_construction(Rng& rng);

/// Random Q, U, V; scaling hypermatrices from random symmetric parameters.
HyperSpectralTriple random_triple(std::size_t n, Rng& rng);

/// Order-4 factor with fibers q_abc = w_abc e_a, |w_abc| = 1; satisfies the
/// fourth-order unitarity constraints.
Hypermatrix unit_phase_factor(std::size_t n, Rng& rng);

/// Complex lambda, gamma, theta and xi chosen so that
/// lambda o conj(gamma) o theta o conj(xi) is real.
SliceInvariantScaling real_product_scaling(std::size_t n, Rng& rng);

/// Real scaling vectors with entries uniform in [lo, hi].
SliceInvariantScaling bounded_scaling(std::size_t n, Rng& rng, double lo, double hi);

/// Uniform random unit vector in C^n.
ComplexVector random_unit_vector(std::size_t n, Rng& rng);

struct CorpusEntry {
    std::string name;
    Hypermatrix value;
    std::string description;
};

/// The reproducible fixture corpus written by the `gen` command.
std::vector<CorpusEntry> fixture_corpus(std::uint64_t seed);

}  // namespace hmx
