#pragma once

// Exact arithmetic building blocks: GMP integers and rationals, a dense
// matrix container, the field Q(sqrt 2), and fraction-free / field-based
// linear algebra used throughout the library.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfectforms {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// num / den in lowest terms (the two-argument mpq_class constructor does
/// not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Raised when operands disagree in shape.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a precondition on the mathematical content fails
/// (non-positive-definite input, singular matrix, non-perfect form, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    [[nodiscard]] std::vector<T> col(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Converts if every entry is integral.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

IntVector int_vector(std::initializer_list<long> values);

/// floor(q + 1/2): nearest integer, ties rounded up.
Integer round_nearest(const Rational& q);
Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

Integer gcd_of(const IntVector& v);
Integer lcm_of_denominators(const RatMatrix& m);

/// Divides by the gcd of entries; the first nonzero entry keeps its sign.
IntVector primitive(IntVector v);

/// First nonzero coordinate positive; zero vector stays unchanged.
bool is_lex_positive(const IntVector& v);
IntVector lex_positive(IntVector v);

Integer dot(const IntVector& a, const IntVector& b);

std::string to_string(const Rational& q);

/// Element of the field Q(sqrt 2), stored as a + b*sqrt(2).
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }
    /// 2^(k/2) for any integer k.
    static QSqrt2 pow_sqrt2(long k);

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& sqrt2_part() const { return b_; }

    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Exact sign of a + b*sqrt(2).
    [[nodiscard]] int sign() const;
    [[nodiscard]] QSqrt2 conjugate() const { return {a_, -b_}; }
    [[nodiscard]] QSqrt2 abs() const { return sign() < 0 ? -*this : *this; }
    /// (a + b sqrt2)(a - b sqrt2), a rational number.
    [[nodiscard]] Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const;

    QSqrt2 operator-() const { return {-a_, -b_}; }
    QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }
    friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QSqrt2& x, const QSqrt2& y) { return y < x; }
    friend bool operator>=(const QSqrt2& x, const QSqrt2& y) { return y <= x; }

private:
    Rational a_{0};
    Rational b_{0};
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const QSqrt2& q) { return q.is_zero(); }

/// Determinant by Gaussian elimination over a field (Rational or QSqrt2).
template <typename Field>
Field determinant(Matrix<Field> m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Field det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(m(pivot, c))) ++pivot;
        if (pivot == n) return Field(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m(r, c))) continue;
            Field f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer determinant(const IntMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Exact inverse; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

/// Adjugate of an integer matrix (integral by construction).
IntMatrix adjugate(const IntMatrix& m);

/// Basis of the right null space { v : m v = 0 }, as primitive integer vectors.
std::vector<IntVector> null_space(const IntMatrix& m);

/// Row-echelon accumulator answering "does this vector increase the rank?".
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t dim) : dim_(dim) {}

    /// Adds v if it is independent of the vectors kept so far.
    bool try_add(const RatVector& v);
    bool try_add(const IntVector& v) { return try_add(to_rational(v)); }
    [[nodiscard]] bool is_independent(const RatVector& v) const;

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }

private:
    RatVector reduce(RatVector v) const;

    std::size_t dim_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace perfectforms
