#include "hmx/tensor_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmx/errors.hpp"

namespace hmx {

namespace {

std::string shape_string(const Shape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

}  // namespace

bool next_index(MultiIndex& idx, std::span<const std::size_t> shape) {
    for (std::size_t a = shape.size(); a-- > 0;) {
        if (++idx[a] < shape[a]) return true;
        idx[a] = 0;
    }
    return false;
}

std::size_t shape_product(std::span<const std::size_t> shape) {
    std::size_t n = 1;
    for (auto s : shape) n *= s;
    return n;
}

Hypermatrix::Hypermatrix(Shape shape) : shape_(std::move(shape)) {
    if (shape_.empty()) throw ShapeError("hypermatrix order must be >= 1");
    for (auto s : shape_)
        if (s == 0) throw ShapeError("hypermatrix sides must be positive: " + shape_string(shape_));
    init_strides();
    data_.assign(shape_product(shape_), Complex{});
}

Hypermatrix::Hypermatrix(Shape shape, std::vector<Complex> entries) : Hypermatrix(std::move(shape)) {
    if (entries.size() != data_.size())
        throw ShapeError("entry count " + std::to_string(entries.size()) + " does not match shape " +
                         shape_string(shape_) + " (expected " + std::to_string(data_.size()) + ")");
    data_ = std::move(entries);
}

Hypermatrix Hypermatrix::filled(Shape shape, Complex value) {
    Hypermatrix h(std::move(shape));
    for (auto& x : h.data_) x = value;
    return h;
}

Hypermatrix Hypermatrix::cubic(std::size_t order, std::size_t side) {
    return Hypermatrix(Shape(order, side));
}

void Hypermatrix::init_strides() {
    strides_.assign(shape_.size(), 1);
    for (std::size_t a = shape_.size(); a-- > 1;) strides_[a - 1] = strides_[a] * shape_[a];
}

bool Hypermatrix::is_cubic() const noexcept {
    for (auto s : shape_)
        if (s != shape_.front()) return false;
    return !shape_.empty();
}

std::size_t Hypermatrix::side() const {
    if (!is_cubic()) throw ShapeError("hypermatrix is not cubic: " + shape_string(shape_));
    return shape_.front();
}

std::size_t Hypermatrix::flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size())
        throw IndexError("index of length " + std::to_string(idx.size()) + " for order-" +
                         std::to_string(shape_.size()) + " hypermatrix");
    std::size_t f = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (idx[a] >= shape_[a])
            throw IndexError("index " + std::to_string(idx[a]) + " out of range on axis " +
                             std::to_string(a));
        f += idx[a] * strides_[a];
    }
    return f;
}

MultiIndex Hypermatrix::unravel(std::size_t flat) const {
    MultiIndex idx(shape_.size());
    for (std::size_t a = 0; a < shape_.size(); ++a) {
        idx[a] = flat / strides_[a];
        flat %= strides_[a];
    }
    return idx;
}

Hypermatrix& Hypermatrix::operator+=(const Hypermatrix& rhs) {
    require_same_shape(*this, rhs, "addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Hypermatrix& Hypermatrix::operator-=(const Hypermatrix& rhs) {
    require_same_shape(*this, rhs, "subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Hypermatrix& Hypermatrix::operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Hypermatrix operator+(Hypermatrix lhs, const Hypermatrix& rhs) { return lhs += rhs; }
Hypermatrix operator-(Hypermatrix lhs, const Hypermatrix& rhs) { return lhs -= rhs; }
Hypermatrix operator*(Complex s, Hypermatrix rhs) { return rhs *= s; }

void require_same_shape(const Hypermatrix& a, const Hypermatrix& b, const char* what) {
    if (a.shape() != b.shape())
        throw ShapeError(std::string(what) + ": shape mismatch " + shape_string(a.shape()) +
                         " vs " + shape_string(b.shape()));
}

Hypermatrix hadamard(const Hypermatrix& a, const Hypermatrix& b) {
    require_same_shape(a, b, "hadamard");
    Hypermatrix out(a.shape());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

Hypermatrix conj(const Hypermatrix& a) {
    Hypermatrix out(a.shape());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::conj(a[i]);
    return out;
}

Hypermatrix cyclic_transpose(const Hypermatrix& a, std::size_t times, RotationDirection dir) {
    const std::size_t m = a.order();
    times %= m;
    if (times == 0) return a;
    // Left rotation by `times`: source axis s lands on target axis (s - times) mod m.
    const std::size_t shift = dir == RotationDirection::Left ? times : m - times;
    Shape out_shape(m);
    for (std::size_t s = 0; s < m; ++s) out_shape[(s + m - shift) % m] = a.extent(s);
    Hypermatrix out(out_shape);
    std::vector<std::size_t> target_stride(m);
    for (std::size_t s = 0; s < m; ++s) target_stride[s] = out.strides()[(s + m - shift) % m];

    MultiIndex idx(m, 0);
    std::size_t flat = 0;
    do {
        std::size_t t = 0;
        for (std::size_t s = 0; s < m; ++s) t += idx[s] * target_stride[s];
        out[t] = a[flat++];
    } while (next_index(idx, a.shape()));
    return out;
}

Hypermatrix kronecker_delta(std::size_t order, std::size_t side) {
    if (order < 1 || side < 1) throw ShapeError("kronecker_delta needs order >= 1 and side >= 1");
    Hypermatrix d = Hypermatrix::cubic(order, side);
    std::size_t diag_stride = 0;
    for (auto s : d.strides()) diag_stride += s;
    for (std::size_t k = 0; k < side; ++k) d[k * diag_stride] = 1.0;
    return d;
}

double frobenius_norm(const Hypermatrix& a) {
    double s = 0.0;
    for (auto x : a.entries()) s += std::norm(x);
    return std::sqrt(s);
}

Complex sum_entries(const Hypermatrix& a) {
    Complex s{};
    for (auto x : a.entries()) s += x;
    return s;
}

double max_abs_diff(const Hypermatrix& a, const Hypermatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double relative_error(const Hypermatrix& a, const Hypermatrix& b) {
    const double denom = std::max(frobenius_norm(b), 1e-300);
    return frobenius_norm(a - b) / denom;
}

Complex correlation_product(std::span<const ComplexVector> vs) {
    if (vs.empty()) throw ShapeError("correlation_product of an empty list");
    const std::size_t len = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != len) throw ShapeError("correlation_product: vector length mismatch");
    Complex total{};
    for (std::size_t k = 0; k < len; ++k) {
        Complex p = 1.0;
        for (const auto& v : vs) p *= v[k];
        total += p;
    }
    return total;
}

ComplexVector entrywise_power(const ComplexVector& v, int exponent) {
    ComplexVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (exponent < 0 && v[k] == Complex{})
            throw DomainError("entrywise_power: zero entry with negative exponent");
        Complex base = exponent < 0 ? 1.0 / v[k] : v[k];
        Complex r = 1.0;
        for (int e = 0; e < std::abs(exponent); ++e) r *= base;
        out[k] = r;
    }
    return out;
}

Hypermatrix vandermonde(const ComplexVector& v) {
    const std::size_t n = v.size();
    if (n == 0) throw ShapeError("vandermonde of an empty vector");
    Hypermatrix out({n, n});
    for (std::size_t j = 0; j < n; ++j) {
        Complex p = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            out.at({i, j}) = p;
            p *= v[j];
        }
    }
    return out;
}

Complex background_bilinear_form(const ComplexVector& a, const ComplexVector& b,
                                 const Hypermatrix& m) {
    if (m.order() != 2 || m.extent(0) != a.size() || m.extent(1) != b.size())
        throw ShapeError("background_bilinear_form: dimension mismatch");
    Complex s{};
    for (std::size_t k0 = 0; k0 < a.size(); ++k0)
        for (std::size_t k1 = 0; k1 < b.size(); ++k1) s += a[k0] * m.at({k0, k1}) * b[k1];
    return s;
}

ComplexVector roots_of_unity(std::size_t n) {
    ComplexVector w(n);
    for (std::size_t j = 0; j < n; ++j)
        w[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    return w;
}

}  // namespace hmx
