#pragma once

#include <cstddef>
#include <vector>

#include "hmx/tensor_core.hpp"

namespace hmx {

/// Operands of an m-operand BM product. Operand p (0-based) carries the
/// summation index on axis (p + 1) mod m; every other axis matches the
/// output shape.
class OperandList {
public:
    /// Validates the operand shapes; throws ShapeError naming the offending
    /// operand and axis.
    explicit OperandList(std::vector<Hypermatrix> ops);

    std::size_t arity() const noexcept { return ops_.size(); }
    std::size_t inner_dim() const noexcept { return inner_; }
    const Shape& output_shape() const noexcept { return out_shape_; }
    const Hypermatrix& operator[](std::size_t p) const { return ops_[p]; }
    const std::vector<Hypermatrix>& operands() const noexcept { return ops_; }

    /// Axis of operand p that carries the summation index.
    std::size_t summation_axis(std::size_t p) const noexcept { return (p + 1) % ops_.size(); }

private:
    std::vector<Hypermatrix> ops_;
    std::size_t inner_ = 0;
    Shape out_shape_;
};

enum class Evaluator {
    /// Plain nested loops straight from the defining sums.
    Reference,
    /// Cached strides and successive contraction, parallel over output entries.
    Optimized,
};

struct EvalOptions {
    Evaluator evaluator = Evaluator::Optimized;
    /// 0 picks std::thread::hardware_concurrency(). Each output entry is
    /// accumulated sequentially by one worker, so results do not depend on
    /// the worker count.
    unsigned workers = 0;
};

Hypermatrix bm_product(const OperandList& ops, const EvalOptions& opt = {});

/// General BM product with a cubic order-m background of side inner_dim().
Hypermatrix general_bm_product(const OperandList& ops, const Hypermatrix& background,
                               const EvalOptions& opt = {});

/// C o general_bm_product(ops, B).
Hypermatrix weighted_product(const Hypermatrix& weights, const OperandList& ops,
                             const Hypermatrix& background, const EvalOptions& opt = {});

/// Dual product: summation and output indices swap roles. Output is cubic of
/// side inner_dim(); `weights` has the forward output shape.
Hypermatrix dual_product(const Hypermatrix& background, const OperandList& ops,
                         const Hypermatrix& weights, const EvalOptions& opt = {});

/// Convenience: BM product of three operands.
Hypermatrix prod(const Hypermatrix& a, const Hypermatrix& b, const Hypermatrix& c);
/// Convenience: general BM product of three operands with background g.
Hypermatrix prod(const Hypermatrix& g, const Hypermatrix& a, const Hypermatrix& b,
                 const Hypermatrix& c);

/// Third-order product following the literally displayed index pattern
/// b[i1,i2,i3] = sum_j a1[i1,j,i2] a2[i1,i2,j] a3[j,i1,i2]. Cubic operands
/// only; kept for comparison with the general m-operand pattern.
Hypermatrix bm_product_displayed_third_order(const Hypermatrix& a1, const Hypermatrix& a2,
                                             const Hypermatrix& a3);

}  // namespace hmx
