#include "hmx/bm_algebra.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "hmx/errors.hpp"

namespace hmx {

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (count < 512 || workers == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(count, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : pool) t.join();
}

void require_background(const OperandList& ops, const Hypermatrix& bg, const char* what) {
    if (bg.order() != ops.arity() || !bg.is_cubic() || bg.side() != ops.inner_dim())
        throw ShapeError(std::string(what) + ": background must be cubic of order " +
                         std::to_string(ops.arity()) + " and side " +
                         std::to_string(ops.inner_dim()));
}

/// Flat offset of operand p at output index `out` with its summation axis
/// zeroed, plus the stride along that axis.
struct OperandCursor {
    const Complex* data;
    std::size_t sum_axis;
    std::size_t step;
    const std::vector<std::size_t>* strides;

    std::size_t base(const MultiIndex& out) const {
        std::size_t b = 0;
        for (std::size_t a = 0; a < out.size(); ++a)
            if (a != sum_axis) b += out[a] * (*strides)[a];
        return b;
    }
};

std::vector<OperandCursor> cursors(const OperandList& ops) {
    std::vector<OperandCursor> cs;
    for (std::size_t p = 0; p < ops.arity(); ++p) {
        const auto& op = ops[p];
        const std::size_t ax = ops.summation_axis(p);
        cs.push_back({op.entries().data(), ax, op.strides()[ax], &op.strides()});
    }
    return cs;
}

/// Fills f[a*k + j] = operand carrying axis a, evaluated at `out` with that
/// axis replaced by j.
void gather_factors(const std::vector<OperandCursor>& cs, const MultiIndex& out, std::size_t k,
                    std::vector<Complex>& f) {
    const std::size_t m = cs.size();
    for (std::size_t p = 0; p < m; ++p) {
        const auto& c = cs[p];
        const std::size_t b = c.base(out);
        for (std::size_t j = 0; j < k; ++j) f[c.sum_axis * k + j] = c.data[b + j * c.step];
    }
}

/// sum_j B[j0..j(m-1)] prod_a f_a[j_a], contracting the last axis first.
Complex contract_background(const Hypermatrix& bg, const std::vector<Complex>& f, std::size_t k,
                            std::vector<Complex>& scratch) {
    const std::size_t m = bg.order();
    scratch.assign(bg.entries().begin(), bg.entries().end());
    std::size_t len = scratch.size();
    for (std::size_t a = m; a-- > 0;) {
        const std::size_t outer = len / k;
        for (std::size_t o = 0; o < outer; ++o) {
            Complex s{};
            for (std::size_t j = 0; j < k; ++j) s += scratch[o * k + j] * f[a * k + j];
            scratch[o] = s;
        }
        len = outer;
    }
    return scratch[0];
}

Hypermatrix bm_reference(const OperandList& ops) {
    Hypermatrix out(ops.output_shape());
    const std::size_t m = ops.arity(), k = ops.inner_dim();
    MultiIndex i(m, 0), src;
    std::size_t flat = 0;
    do {
        Complex total{};
        for (std::size_t j = 0; j < k; ++j) {
            Complex term = 1.0;
            for (std::size_t p = 0; p < m; ++p) {
                src = i;
                src[ops.summation_axis(p)] = j;
                term *= ops[p](src);
            }
            total += term;
        }
        out[flat++] = total;
    } while (next_index(i, ops.output_shape()));
    return out;
}

Hypermatrix general_reference(const OperandList& ops, const Hypermatrix& bg) {
    Hypermatrix out(ops.output_shape());
    const std::size_t m = ops.arity();
    MultiIndex i(m, 0), src;
    std::size_t flat = 0;
    do {
        Complex total{};
        MultiIndex j(m, 0);
        do {
            Complex term = bg(j);
            for (std::size_t p = 0; p < m; ++p) {
                src = i;
                const std::size_t ax = ops.summation_axis(p);
                src[ax] = j[ax];
                term *= ops[p](src);
            }
            total += term;
        } while (next_index(j, bg.shape()));
        out[flat++] = total;
    } while (next_index(i, ops.output_shape()));
    return out;
}

Hypermatrix dual_reference(const Hypermatrix& bg, const OperandList& ops, const Hypermatrix& c) {
    const std::size_t m = ops.arity();
    Hypermatrix out(bg.shape());
    MultiIndex j(m, 0), src;
    std::size_t flat = 0;
    do {
        Complex total{};
        MultiIndex i(m, 0);
        std::size_t iflat = 0;
        do {
            Complex term = c[iflat++];
            for (std::size_t p = 0; p < m; ++p) {
                src = i;
                const std::size_t ax = ops.summation_axis(p);
                src[ax] = j[ax];
                term *= ops[p](src);
            }
            total += term;
        } while (next_index(i, ops.output_shape()));
        out[flat] = bg[flat] * total;
        ++flat;
    } while (next_index(j, bg.shape()));
    return out;
}

}  // namespace

OperandList::OperandList(std::vector<Hypermatrix> ops) : ops_(std::move(ops)) {
    const std::size_t m = ops_.size();
    if (m < 2) throw ShapeError("BM product needs at least 2 operands, got " + std::to_string(m));
    for (std::size_t p = 0; p < m; ++p)
        if (ops_[p].order() != m)
            throw ShapeError("operand " + std::to_string(p) + " has order " +
                             std::to_string(ops_[p].order()) + ", expected " + std::to_string(m));
    inner_ = ops_[m - 1].extent(0);
    out_shape_.resize(m);
    out_shape_[0] = ops_[0].extent(0);
    for (std::size_t a = 1; a < m; ++a) out_shape_[a] = ops_[m - 1].extent(a);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t a = 0; a < m; ++a) {
            const std::size_t want = a == summation_axis(p) ? inner_ : out_shape_[a];
            if (ops_[p].extent(a) != want)
                throw ShapeError("operand " + std::to_string(p) + " axis " + std::to_string(a) +
                                 ": expected extent " + std::to_string(want) + ", found " +
                                 std::to_string(ops_[p].extent(a)));
        }
    }
}

Hypermatrix bm_product(const OperandList& ops, const EvalOptions& opt) {
    if (opt.evaluator == Evaluator::Reference) return bm_reference(ops);
    Hypermatrix out(ops.output_shape());
    const auto cs = cursors(ops);
    const std::size_t k = ops.inner_dim();
    parallel_for(out.size(), opt.workers, [&](std::size_t b, std::size_t e) {
        std::vector<std::size_t> base(cs.size());
        for (std::size_t flat = b; flat < e; ++flat) {
            const MultiIndex i = out.unravel(flat);
            for (std::size_t p = 0; p < cs.size(); ++p) base[p] = cs[p].base(i);
            Complex total{};
            for (std::size_t j = 0; j < k; ++j) {
                Complex term = 1.0;
                for (std::size_t p = 0; p < cs.size(); ++p) term *= cs[p].data[base[p] + j * cs[p].step];
                total += term;
            }
            out[flat] = total;
        }
    });
    return out;
}

Hypermatrix general_bm_product(const OperandList& ops, const Hypermatrix& background,
                               const EvalOptions& opt) {
    require_background(ops, background, "general_bm_product");
    if (opt.evaluator == Evaluator::Reference) return general_reference(ops, background);
    Hypermatrix out(ops.output_shape());
    const auto cs = cursors(ops);
    const std::size_t k = ops.inner_dim(), m = ops.arity();
    parallel_for(out.size(), opt.workers, [&](std::size_t b, std::size_t e) {
        std::vector<Complex> f(m * k), scratch;
        for (std::size_t flat = b; flat < e; ++flat) {
            gather_factors(cs, out.unravel(flat), k, f);
            out[flat] = contract_background(background, f, k, scratch);
        }
    });
    return out;
}

Hypermatrix weighted_product(const Hypermatrix& weights, const OperandList& ops,
                             const Hypermatrix& background, const EvalOptions& opt) {
    if (weights.shape() != ops.output_shape())
        throw ShapeError("weighted_product: weight hypermatrix must have the product's output shape");
    return hadamard(weights, general_bm_product(ops, background, opt));
}

Hypermatrix dual_product(const Hypermatrix& background, const OperandList& ops,
                         const Hypermatrix& weights, const EvalOptions& opt) {
    require_background(ops, background, "dual_product");
    if (weights.shape() != ops.output_shape())
        throw ShapeError("dual_product: weight hypermatrix must have the forward output shape");
    if (opt.evaluator == Evaluator::Reference) return dual_reference(background, ops, weights);

    const std::size_t k = ops.inner_dim(), m = ops.arity();
    const auto cs = cursors(ops);
    const std::size_t tail = background.size() / k;  // entries per leading index j0
    Hypermatrix acc(background.shape());
    parallel_for(k, opt.workers, [&](std::size_t b, std::size_t e) {
        std::vector<Complex> f(m * k), partial(tail);
        MultiIndex i(m, 0);
        std::size_t iflat = 0;
        do {
            const Complex w = weights[iflat++];
            gather_factors(cs, i, k, f);
            // Outer product of f_1 .. f_(m-1), built axis by axis.
            partial[0] = w;
            std::size_t len = 1;
            for (std::size_t a = 1; a < m; ++a) {
                for (std::size_t o = len; o-- > 0;) {
                    const Complex v = partial[o];
                    for (std::size_t j = 0; j < k; ++j) partial[o * k + j] = v * f[a * k + j];
                }
                len *= k;
            }
            for (std::size_t j0 = b; j0 < e; ++j0) {
                const Complex f0 = f[j0];
                Complex* dst = acc.entries().data() + j0 * tail;
                for (std::size_t t = 0; t < tail; ++t) dst[t] += f0 * partial[t];
            }
        } while (next_index(i, ops.output_shape()));
    });
    return hadamard(background, acc);
}

Hypermatrix prod(const Hypermatrix& a, const Hypermatrix& b, const Hypermatrix& c) {
    return bm_product(OperandList({a, b, c}));
}

Hypermatrix prod(const Hypermatrix& g, const Hypermatrix& a, const Hypermatrix& b,
                 const Hypermatrix& c) {
    return general_bm_product(OperandList({a, b, c}), g);
}

Hypermatrix bm_product_displayed_third_order(const Hypermatrix& a1, const Hypermatrix& a2,
                                             const Hypermatrix& a3) {
    for (const auto* h : {&a1, &a2, &a3})
        if (h->order() != 3 || !h->is_cubic() || h->side() != a1.extent(0))
            throw ShapeError("displayed third-order product needs cubic operands of equal side");
    const std::size_t n = a1.extent(0);
    Hypermatrix out = Hypermatrix::cubic(3, n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2)
            for (std::size_t i3 = 0; i3 < n; ++i3) {
                Complex s{};
                for (std::size_t j = 0; j < n; ++j)
                    s += a1.at({i1, j, i2}) * a2.at({i1, i2, j}) * a3.at({j, i1, i2});
                out.at({i1, i2, i3}) = s;
            }
    return out;
}

}  // namespace hmx
