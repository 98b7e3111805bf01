#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hmx {

using Complex = std::complex<double>;
using Shape = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;
using ComplexVector = std::vector<Complex>;

/// Advances a row-major multi-index (last axis fastest). Returns false after
/// wrapping past the final index.
bool next_index(MultiIndex& idx, std::span<const std::size_t> shape);

std::size_t shape_product(std::span<const std::size_t> shape);

/// Dense complex hypermatrix of arbitrary order. Entries are stored
/// row-major with the last index varying fastest; indices are 0-based.
class Hypermatrix {
public:
    Hypermatrix() = default;
    explicit Hypermatrix(Shape shape);
    Hypermatrix(Shape shape, std::vector<Complex> entries);

    static Hypermatrix zeros(Shape shape) { return Hypermatrix(std::move(shape)); }
    static Hypermatrix filled(Shape shape, Complex value);
    static Hypermatrix ones(Shape shape) { return filled(std::move(shape), 1.0); }
    /// Cubic order-`order` hypermatrix with side `side`, all zeros.
    static Hypermatrix cubic(std::size_t order, std::size_t side);

    std::size_t order() const noexcept { return shape_.size(); }
    const Shape& shape() const noexcept { return shape_; }
    std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_cubic() const noexcept;
    /// Common side length; throws ShapeError when not cubic.
    std::size_t side() const;
    const std::vector<std::size_t>& strides() const noexcept { return strides_; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    Complex& operator[](std::size_t flat) { return data_[flat]; }
    const Complex& operator[](std::size_t flat) const { return data_[flat]; }

    Complex& operator()(std::span<const std::size_t> idx) { return data_[flat_index(idx)]; }
    const Complex& operator()(std::span<const std::size_t> idx) const {
        return data_[flat_index(idx)];
    }
    Complex& at(std::initializer_list<std::size_t> idx) {
        return data_[flat_index({idx.begin(), idx.size()})];
    }
    const Complex& at(std::initializer_list<std::size_t> idx) const {
        return data_[flat_index({idx.begin(), idx.size()})];
    }

    std::size_t flat_index(std::span<const std::size_t> idx) const;
    MultiIndex unravel(std::size_t flat) const;

    bool operator==(const Hypermatrix& other) const = default;

    Hypermatrix& operator+=(const Hypermatrix& rhs);
    Hypermatrix& operator-=(const Hypermatrix& rhs);
    Hypermatrix& operator*=(Complex s);

private:
    Shape shape_;
    std::vector<std::size_t> strides_;
    std::vector<Complex> data_;

    void init_strides();
};

Hypermatrix operator+(Hypermatrix lhs, const Hypermatrix& rhs);
Hypermatrix operator-(Hypermatrix lhs, const Hypermatrix& rhs);
Hypermatrix operator*(Complex s, Hypermatrix rhs);

void require_same_shape(const Hypermatrix& a, const Hypermatrix& b, const char* what);

Hypermatrix hadamard(const Hypermatrix& a, const Hypermatrix& b);
Hypermatrix conj(const Hypermatrix& a);

enum class RotationDirection {
    /// result[i2,...,im,i1] = A[i1,...,im]; matrix transpose at order 2.
    Left,
    /// result[im,i1,...,i(m-1)] = A[i1,...,im].
    Right,
};

/// Cyclic index rotation applied `times` times (T^times).
Hypermatrix cyclic_transpose(const Hypermatrix& a, std::size_t times = 1,
                             RotationDirection dir = RotationDirection::Left);

Hypermatrix kronecker_delta(std::size_t order, std::size_t side);

double frobenius_norm(const Hypermatrix& a);
Complex sum_entries(const Hypermatrix& a);
double max_abs_diff(const Hypermatrix& a, const Hypermatrix& b);
/// ||a - b||_F / max(||b||_F, tiny).
double relative_error(const Hypermatrix& a, const Hypermatrix& b);

/// Sum over positions of the entrywise product of all vectors.
Complex correlation_product(std::span<const ComplexVector> vs);

/// Entrywise integer power; negative exponents require nonzero entries.
ComplexVector entrywise_power(const ComplexVector& v, int exponent);

/// n x n matrix with result[i, j] = v[j]^i.
Hypermatrix vandermonde(const ComplexVector& v);

/// sum_{k0,k1} a[k0] M[k0,k1] b[k1].
Complex background_bilinear_form(const ComplexVector& a, const ComplexVector& b,
                                 const Hypermatrix& m);

/// (exp(2 pi i j / n))_{0<=j<n}.
ComplexVector roots_of_unity(std::size_t n);

}  // namespace hmx
