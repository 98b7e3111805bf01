#include <gtest/gtest.h>

#include "hmx/bm_algebra.hpp"
#include "hmx/errors.hpp"
#include "hmx/fixtures.hpp"
#include "test_util.hpp"

using namespace hmx;

namespace {

const EvalOptions kRef{Evaluator::Reference, 1};

}  // namespace

TEST(OperandList, ShapeRulesAndSummationAxis) {
    Rng rng(10);
    const auto ops = random_operands(3, {2, 3, 4}, 5, rng);
    EXPECT_EQ(ops.arity(), 3u);
    EXPECT_EQ(ops.inner_dim(), 5u);
    EXPECT_EQ(ops.output_shape(), (Shape{2, 3, 4}));
    EXPECT_EQ(ops[0].shape(), (Shape{2, 5, 4}));
    EXPECT_EQ(ops[1].shape(), (Shape{2, 3, 5}));
    EXPECT_EQ(ops[2].shape(), (Shape{5, 3, 4}));
    EXPECT_EQ(ops.summation_axis(2), 0u);
}

TEST(OperandList, RejectsEverySingleAxisPerturbation) {
    Rng rng(11);
    for (std::size_t m = 2; m <= 4; ++m) {
        const auto good = random_operands(m, Shape(m, 2), 3, rng).operands();
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t a = 0; a < m; ++a) {
                // At m = 2 each output side is carried by one operand only.
                if (m == 2 && a != (p + 1) % m) continue;
                auto bad = good;
                Shape s = bad[p].shape();
                s[a] += 1;
                bad[p] = Hypermatrix::zeros(s);
                EXPECT_THROW(OperandList{bad}, ShapeError) << "m=" << m << " operand " << p << " axis " << a;
            }
    }
    EXPECT_THROW(OperandList{std::vector<Hypermatrix>{Hypermatrix::zeros({2, 2})}}, ShapeError);
}

TEST(BmProduct, IdentityTimesX) {
    Rng rng(12);
    const auto X = random_hypermatrix({3, 3}, rng);
    EXPECT_LE(max_abs_diff(bm_product(OperandList({kronecker_delta(2, 3), X})), X), 0.0);
}

TEST(BmProduct, AllOnesCountsSummands) {
    for (std::size_t k = 1; k <= 4; ++k) {
        const OperandList ops({Hypermatrix::ones({2, k, 2}), Hypermatrix::ones({2, 2, k}), Hypermatrix::ones({k, 2, 2})});
        const auto b = bm_product(ops);
        for (const auto& z : b.entries()) EXPECT_EQ(z, Complex(static_cast<double>(k)));
        const auto g = general_bm_product(ops, Hypermatrix::ones({k, k, k}));
        for (const auto& z : g.entries()) EXPECT_EQ(z, Complex(static_cast<double>(k * k * k)));
    }
}

TEST(BmProduct, IntegerThirdOrderMatchesQuadrupleLoop) {
    Rng rng(13);
    const auto ops = random_operands(3, {2, 2, 2}, 2, rng, true);
    const auto& a = ops.operands();
    Hypermatrix expected = Hypermatrix::cubic(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t t = 0; t < 2; ++t)
                    expected.at({i, j, k}) += a[0].at({i, t, k}) * a[1].at({i, j, t}) * a[2].at({t, j, k});
    EXPECT_EQ(bm_product(ops), expected);
    EXPECT_EQ(bm_product(ops, kRef), expected);
}

TEST(GeneralBmProduct, IntegerThirdOrderMatchesSixLoop) {
    Rng rng(14);
    const auto ops = random_operands(3, {2, 2, 2}, 2, rng, true);
    const auto B = random_integer_hypermatrix({2, 2, 2}, rng);
    const auto& a = ops.operands();
    Hypermatrix expected = Hypermatrix::cubic(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t t0 = 0; t0 < 2; ++t0)
                    for (std::size_t t1 = 0; t1 < 2; ++t1)
                        for (std::size_t t2 = 0; t2 < 2; ++t2)
                            expected.at({i, j, k}) += a[0].at({i, t1, k}) * a[1].at({i, j, t2}) *
                                                      a[2].at({t0, j, k}) * B.at({t0, t1, t2});
    EXPECT_EQ(general_bm_product(ops, B), expected);
}

TEST(GeneralBmProduct, DeltaBackgroundRecoversBmProduct) {
    Rng rng(15);
    for (std::size_t m = 2; m <= 4; ++m) {
        const auto ops = random_operands(m, Shape(m, 3), 2, rng, true);
        EXPECT_EQ(general_bm_product(ops, kronecker_delta(m, 2)), bm_product(ops));
    }
}

TEST(GeneralBmProduct, RejectsBadBackground) {
    Rng rng(16);
    const auto ops = random_operands(3, {2, 2, 2}, 3, rng);
    EXPECT_THROW(general_bm_product(ops, kronecker_delta(3, 2)), ShapeError);
    EXPECT_THROW(general_bm_product(ops, kronecker_delta(2, 3)), ShapeError);
}

TEST(Products, OptimizedMatchesLoopOraclesAcrossOrders) {
    Rng rng(17);
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t k = 1; k <= 3; ++k) {
            Shape out(m);
            for (auto& s : out) s = 1 + rng() % 3;
            const auto ops = random_operands(m, out, k, rng);
            const auto B = random_hypermatrix(Shape(m, k), rng);
            const auto C = random_hypermatrix(out, rng);
            EXPECT_LE(oracle::rel_diff(bm_product(ops), oracle::bm(ops.operands())), 1e-13);
            EXPECT_LE(oracle::rel_diff(bm_product(ops, kRef), oracle::bm(ops.operands())), 1e-13);
            EXPECT_LE(oracle::rel_diff(general_bm_product(ops, B), oracle::general_bm(ops.operands(), B)), 1e-13);
            EXPECT_LE(oracle::rel_diff(dual_product(B, ops, C), oracle::dual(B, ops.operands(), C)), 1e-13);
            EXPECT_LE(oracle::rel_diff(dual_product(B, ops, C, kRef), oracle::dual(B, ops.operands(), C)), 1e-13);
        }
}

TEST(Products, ResultIndependentOfWorkerCount) {
    Rng rng(18);
    const auto ops = random_operands(3, {3, 3, 3}, 3, rng);
    const auto B = random_hypermatrix({3, 3, 3}, rng);
    const auto one = general_bm_product(ops, B, {Evaluator::Optimized, 1});
    for (unsigned w : {2u, 3u, 7u}) EXPECT_EQ(general_bm_product(ops, B, {Evaluator::Optimized, w}), one);
}

TEST(WeightedProduct, Examples) {
    Rng rng(19);
    const auto ops = random_operands(3, {2, 3, 2}, 2, rng);
    const auto B = random_hypermatrix({2, 2, 2}, rng);
    const auto g = general_bm_product(ops, B);
    EXPECT_EQ(weighted_product(Hypermatrix::ones({2, 3, 2}), ops, B), g);
    EXPECT_EQ(weighted_product(Hypermatrix::zeros({2, 3, 2}), ops, B), Hypermatrix::zeros({2, 3, 2}));
    const auto C = random_hypermatrix({2, 3, 2}, rng);
    const auto composed = hadamard(C, oracle::general_bm(ops.operands(), B));
    EXPECT_LE(oracle::rel_diff(weighted_product(C, ops, B), composed), 1e-13);
    EXPECT_THROW(weighted_product(Hypermatrix::ones({2, 2, 2}), ops, B), ShapeError);
}

TEST(DualProduct, ZeroBackgroundGivesZero) {
    Rng rng(20);
    const auto ops = random_operands(3, {2, 2, 2}, 3, rng);
    const auto C = random_hypermatrix({2, 2, 2}, rng);
    EXPECT_EQ(dual_product(Hypermatrix::zeros({3, 3, 3}), ops, C), Hypermatrix::zeros({3, 3, 3}));
}

TEST(DualProduct, SecondOrderSelfDuality) {
    Rng rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const auto ops = random_operands(2, {3, 3}, 3, rng);
        const auto B = random_hypermatrix({3, 3}, rng);
        const auto C = random_hypermatrix({3, 3}, rng);
        const OperandList swapped({ops[1], ops[0]});
        EXPECT_LE(oracle::rel_diff(dual_product(B, ops, C), weighted_product(B, swapped, C)), 1e-13);
    }
}

TEST(DualProduct, EntrySumDuality) {
    Rng rng(22);
    for (std::size_t m = 2; m <= 3; ++m)
        for (int trial = 0; trial < 5; ++trial) {
            Shape out(m);
            for (auto& s : out) s = 1 + rng() % 3;
            const std::size_t k = 1 + rng() % 3;
            const auto ops = random_operands(m, out, k, rng);
            const auto B = random_hypermatrix(Shape(m, k), rng);
            const auto C = random_hypermatrix(out, rng);
            const Complex lhs = sum_entries(weighted_product(C, ops, B));
            const Complex rhs = sum_entries(dual_product(B, ops, C));
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
        }
}

TEST(BmProduct, MatrixCaseMatchesTextbook) {
    Rng rng(23);
    for (std::size_t r = 1; r <= 8; ++r)
        for (std::size_t c = 1; c <= 8; c += 3) {
            const std::size_t k = 1 + (r + c) % 8;
            const auto X = random_hypermatrix({r, k}, rng);
            const auto Y = random_hypermatrix({k, c}, rng);
            oracle::CMat x(r, std::vector<Complex>(k)), y(k, std::vector<Complex>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t t = 0; t < k; ++t) x[i][t] = X.at({i, t});
            for (std::size_t t = 0; t < k; ++t)
                for (std::size_t j = 0; j < c; ++j) y[t][j] = Y.at({t, j});
            const auto xy = oracle::matmul(x, y);
            Hypermatrix expected({r, c});
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) expected.at({i, j}) = xy[i][j];
            EXPECT_LE(oracle::rel_diff(bm_product(OperandList({X, Y})), expected), 1e-13);
        }
}

TEST(BmProduct, DisplayedThirdOrderVariantDiffers) {
    Rng rng(24);
    const auto a = random_integer_hypermatrix({2, 2, 2}, rng);
    const auto b = random_integer_hypermatrix({2, 2, 2}, rng);
    const auto c = random_integer_hypermatrix({2, 2, 2}, rng);
    Hypermatrix expected = Hypermatrix::cubic(3, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t t = 0; t < 2; ++t)
                    expected.at({i, j, k}) += a.at({i, t, j}) * b.at({i, j, t}) * c.at({t, i, j});
    EXPECT_EQ(bm_product_displayed_third_order(a, b, c), expected);
}
