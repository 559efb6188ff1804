#include "perfectforms/forms.hpp"

#include <string>

namespace perfectforms {

std::vector<std::pair<std::size_t, std::size_t>> upper_index_pairs(std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(triangular_size(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) pairs.emplace_back(i, j);
    return pairs;
}

// ---------------------------------------------------------------------------
// QuadForm

QuadForm::QuadForm(RatMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() == 0 || !m_.square()) throw DimensionError("quadratic form needs a non-empty square matrix");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i + 1; j < m_.cols(); ++j)
            if (m_(i, j) != m_(j, i)) throw DomainError("quadratic form matrix is not symmetric");
}

QuadForm::QuadForm(const IntMatrix& entries) : QuadForm(to_rational(entries)) {}

QuadForm QuadForm::identity(std::size_t d) { return QuadForm(RatMatrix::identity(d)); }

QuadForm QuadForm::diagonal(const RatVector& diag) {
    RatMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return QuadForm(std::move(m));
}

QuadForm QuadForm::from_upper(std::size_t d, const RatVector& upper) {
    if (upper.size() != triangular_size(d)) throw DimensionError("upper triangle has the wrong length");
    RatMatrix m(d, d);
    std::size_t k = 0;
    for (auto [i, j] : upper_index_pairs(d)) {
        m(i, j) = upper[k];
        m(j, i) = upper[k];
        ++k;
    }
    return QuadForm(std::move(m));
}

QuadForm QuadForm::outer(const IntVector& x) {
    RatMatrix m(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = Rational(x[i] * x[j]);
    return QuadForm(std::move(m));
}

bool QuadForm::is_integral() const { return to_integer(m_).has_value(); }

QuadForm QuadForm::scaled(const Rational& alpha) const {
    RatMatrix m = m_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= alpha;
    return QuadForm(std::move(m));
}

QuadForm QuadForm::operator+(const QuadForm& other) const {
    if (other.dim() != dim()) throw DimensionError("adding forms of different dimension");
    RatMatrix m = m_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += other.m_(i, j);
    return QuadForm(std::move(m));
}

Rational QuadForm::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
    return t;
}

// ---------------------------------------------------------------------------
// UnimodularMatrix

UnimodularMatrix::UnimodularMatrix(IntMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() == 0 || !m_.square()) throw DimensionError("unimodular matrix must be square and non-empty");
    Integer det = determinant(m_);
    if (abs(det) != 1) throw DomainError("matrix is not unimodular (|det| = " + det.get_str() + ")");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t d) { return UnimodularMatrix(IntMatrix::identity(d), trusted{}); }

UnimodularMatrix UnimodularMatrix::inverse() const {
    auto inv = to_integer(perfectforms::inverse(to_rational(m_)));
    if (!inv) throw std::logic_error("inverse of a unimodular matrix is not integral");
    return UnimodularMatrix(std::move(*inv), trusted{});
}

// ---------------------------------------------------------------------------
// Evaluation and inner products

Rational evaluate(const QuadForm& q, const IntVector& x) { return bilinear(q, x, x); }

Rational bilinear(const QuadForm& q, const IntVector& x, const IntVector& y) {
    const std::size_t d = q.dim();
    if (x.size() != d || y.size() != d) throw DimensionError("vector length does not match form dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (y[j] != 0) row += q(i, j) * y[j];
        s += row * x[i];
    }
    return s;
}

Rational trace_inner(const QuadForm& p, const QuadForm& q) {
    if (p.dim() != q.dim()) throw DimensionError("trace inner product of forms of different dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) s += p(i, j) * q(i, j);
    return s;
}

QSqrt2 VectorizedForm::inner(const VectorizedForm& other) const {
    if (other.coords.size() != coords.size()) throw DimensionError("vectorized forms of different length");
    QSqrt2 s;
    for (std::size_t k = 0; k < coords.size(); ++k) s += coords[k] * other.coords[k];
    return s;
}

VectorizedForm phi(const QuadForm& q) {
    VectorizedForm v;
    v.dim = q.dim();
    v.coords.reserve(q.n());
    for (auto [i, j] : upper_index_pairs(q.dim())) {
        if (i == j)
            v.coords.emplace_back(q(i, j));
        else
            v.coords.emplace_back(Rational(0), q(i, j));
    }
    return v;
}

QuadForm phi_inverse(const VectorizedForm& v) {
    if (v.coords.size() != triangular_size(v.dim)) throw DimensionError("vectorized form has the wrong length");
    RatVector upper;
    upper.reserve(v.coords.size());
    std::size_t k = 0;
    for (auto [i, j] : upper_index_pairs(v.dim)) {
        const QSqrt2& c = v.coords[k++];
        if (i == j) {
            if (c.sqrt2_part() != 0) throw DomainError("diagonal coordinate must be rational");
            upper.push_back(c.rational_part());
        } else {
            if (c.rational_part() != 0) throw DomainError("off-diagonal coordinate must be a rational multiple of sqrt(2)");
            upper.push_back(c.sqrt2_part());
        }
    }
    return QuadForm::from_upper(v.dim, upper);
}

IntVector phi_prime(const QuadForm& q) {
    auto m = q.integer_matrix();
    if (!m) throw DomainError("phi_prime requires an integral form");
    IntVector out;
    out.reserve(q.n());
    for (auto [i, j] : upper_index_pairs(q.dim())) out.push_back(i == j ? (*m)(i, j) : Integer(2 * (*m)(i, j)));
    return out;
}

IntVector phi_prime_outer(const IntVector& x) {
    IntVector out;
    out.reserve(triangular_size(x.size()));
    for (auto [i, j] : upper_index_pairs(x.size())) out.push_back(i == j ? Integer(x[i] * x[i]) : Integer(2 * x[i] * x[j]));
    return out;
}

// ---------------------------------------------------------------------------
// Action, duality, definiteness

QuadForm apply_unimodular(const QuadForm& q, const UnimodularMatrix& u) {
    if (q.dim() != u.dim()) throw DimensionError("unimodular matrix and form dimensions differ");
    RatMatrix ur = to_rational(u.matrix());
    return QuadForm(ur.transpose() * q.matrix() * ur);
}

bool is_positive_definite(const QuadForm& q) {
    // Gaussian elimination without pivoting: the k-th pivot equals the ratio
    // of consecutive leading principal minors.
    RatMatrix a = q.matrix();
    const std::size_t d = a.rows();
    for (std::size_t k = 0; k < d; ++k) {
        if (a(k, k) <= 0) return false;
        for (std::size_t i = k + 1; i < d; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < d; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

void require_positive_definite(const QuadForm& q, const char* what) {
    if (!is_positive_definite(q)) throw DomainError(std::string(what) + ": form is not positive definite");
}

QuadForm dual(const QuadForm& q) {
    require_positive_definite(q, "dual");
    return QuadForm(inverse(q.matrix()));
}

QuadForm primitive_integral(const QuadForm& q) {
    Integer den = lcm_of_denominators(q.matrix());
    Integer g = 0;
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) g = gcd(g, Rational(q(i, j) * den).get_num());
    if (g == 0) return q;
    return q.scaled(Rational(den) / g);
}

}  // namespace perfectforms
