#pragma once

// Quadratic forms over the rationals, the trace inner product, the
// isometric vectorizations of symmetric matrices, the GL_d(Z) action and
// duality.

#include "perfectforms/exact.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace perfectforms {

/// Number of independent entries of a symmetric d x d matrix, d(d+1)/2.
constexpr std::size_t triangular_size(std::size_t d) { return d * (d + 1) / 2; }

/// Index pairs (i, j), i <= j, in row-major lexicographic order. This is the
/// single coordinate order used by every vectorization in the library.
std::vector<std::pair<std::size_t, std::size_t>> upper_index_pairs(std::size_t d);

/// A symmetric d x d matrix with exact rational entries, read as the
/// quadratic form x -> x^t Q x. Immutable once constructed.
class QuadForm {
public:
    /// Throws DimensionError for an empty or non-square matrix and
    /// DomainError for an asymmetric one.
    explicit QuadForm(RatMatrix entries);
    explicit QuadForm(const IntMatrix& entries);

    static QuadForm identity(std::size_t d);
    static QuadForm diagonal(const RatVector& diag);
    /// Builds a symmetric matrix from its upper triangle in the canonical order.
    static QuadForm from_upper(std::size_t d, const RatVector& upper);
    /// The rank-one form x x^t.
    static QuadForm outer(const IntVector& x);

    [[nodiscard]] std::size_t dim() const { return m_.rows(); }
    [[nodiscard]] std::size_t n() const { return triangular_size(dim()); }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    [[nodiscard]] const RatMatrix& matrix() const { return m_; }

    [[nodiscard]] bool is_integral() const;
    [[nodiscard]] std::optional<IntMatrix> integer_matrix() const { return to_integer(m_); }
    [[nodiscard]] QuadForm scaled(const Rational& alpha) const;
    [[nodiscard]] QuadForm operator+(const QuadForm& other) const;
    [[nodiscard]] Rational trace() const;
    [[nodiscard]] Rational det() const { return determinant(m_); }

    friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.m_ == b.m_; }
    friend bool operator!=(const QuadForm& a, const QuadForm& b) { return !(a == b); }

private:
    RatMatrix m_;
};

/// An integer matrix with determinant +-1, verified on construction.
class UnimodularMatrix {
public:
    explicit UnimodularMatrix(IntMatrix entries);
    static UnimodularMatrix identity(std::size_t d);

    [[nodiscard]] std::size_t dim() const { return m_.rows(); }
    [[nodiscard]] const IntMatrix& matrix() const { return m_; }
    [[nodiscard]] const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    [[nodiscard]] UnimodularMatrix inverse() const;
    [[nodiscard]] UnimodularMatrix transpose() const { return UnimodularMatrix(m_.transpose(), trusted{}); }
    /// U^{-t}, the transform relating dual forms.
    [[nodiscard]] UnimodularMatrix inverse_transpose() const { return inverse().transpose(); }
    [[nodiscard]] IntVector apply(const IntVector& x) const { return m_ * x; }

    friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
        return UnimodularMatrix(a.m_ * b.m_, trusted{});
    }
    friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) { return a.m_ == b.m_; }

private:
    struct trusted {};
    UnimodularMatrix(IntMatrix entries, trusted) : m_(std::move(entries)) {}

    IntMatrix m_;
};

/// phi(Q): coordinates Q_ii and sqrt(2) Q_ij (i < j), each stored in Q(sqrt 2).
struct VectorizedForm {
    std::size_t dim = 0;
    std::vector<QSqrt2> coords;

    [[nodiscard]] std::size_t n() const { return coords.size(); }
    [[nodiscard]] QSqrt2 inner(const VectorizedForm& other) const;
};

/// Q[x] = x^t Q x.
Rational evaluate(const QuadForm& q, const IntVector& x);
/// x^t Q y.
Rational bilinear(const QuadForm& q, const IntVector& x, const IntVector& y);

/// <P, Q> = Tr(P^t Q) = sum_ij P_ij Q_ij.
Rational trace_inner(const QuadForm& p, const QuadForm& q);

VectorizedForm phi(const QuadForm& q);
QuadForm phi_inverse(const VectorizedForm& v);

/// Integral embedding: Q_ii and 2 Q_ij (i < j). Throws DomainError for
/// non-integral input.
IntVector phi_prime(const QuadForm& q);
/// phi_prime(x x^t) without building the matrix.
IntVector phi_prime_outer(const IntVector& x);

/// U^t Q U.
QuadForm apply_unimodular(const QuadForm& q, const UnimodularMatrix& u);

/// Q^{-1}; throws DomainError unless q is positive definite.
QuadForm dual(const QuadForm& q);

/// Exact test via leading principal minors.
bool is_positive_definite(const QuadForm& q);

/// Throws DomainError(what) unless q is positive definite.
void require_positive_definite(const QuadForm& q, const char* what);

/// Smallest positive rational multiple with integer entries whose gcd is 1.
QuadForm primitive_integral(const QuadForm& q);

}  // namespace perfectforms
