#include "perfectforms/exact.hpp"

#include <cmath>
#include <numeric>

namespace perfectforms {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) return std::nullopt;
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

IntVector int_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

Integer floor_rational(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_rational(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer round_nearest(const Rational& q) { return floor_rational(q + Rational(1, 2)); }

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

Integer lcm_of_denominators(const RatMatrix& m) {
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    return l;
}

IntVector primitive(IntVector v) {
    Integer g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

bool is_lex_positive(const IntVector& v) {
    for (const auto& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

IntVector lex_positive(IntVector v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// QSqrt2

QSqrt2 QSqrt2::pow_sqrt2(long k) {
    // 2^(k/2) = 2^floor(k/2) * sqrt2^(k mod 2)
    long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
    long rest = k - 2 * half;
    Rational p(1);
    if (half >= 0) {
        mpz_mul_2exp(p.get_num_mpz_t(), p.get_num_mpz_t(), static_cast<mp_bitcnt_t>(half));
    } else {
        mpz_mul_2exp(p.get_den_mpz_t(), p.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-half));
    }
    p.canonicalize();
    return rest == 0 ? QSqrt2(p) : QSqrt2(Rational(0), p);
}

int QSqrt2::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 2 b^2
    int cmp_val = cmp(a_ * a_, 2 * b_ * b_);
    return cmp_val > 0 ? sa : (cmp_val < 0 ? sb : 0);
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
    Rational nrm = o.norm();
    if (nrm == 0) throw DomainError("division by zero in Q(sqrt 2)");
    *this *= o.conjugate();
    a_ /= nrm;
    b_ /= nrm;
    return *this;
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QSqrt2::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string s = a_ == 0 ? std::string() : a_.get_str() + (b_ > 0 ? " + " : " - ");
    Rational mag = (a_ == 0 || b_ > 0) ? b_ : Rational(-b_);
    return s + mag.get_str() + "*sqrt(2)";
}

// ---------------------------------------------------------------------------
// Linear algebra

Integer determinant(const IntMatrix& input) {
    if (!input.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const RatMatrix& m) {
    IncrementalRank acc(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) acc.try_add(m.row(i));
    return acc.rank();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix& input) {
    if (!input.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = input.rows();
    RatMatrix a = input;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw DomainError("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    Integer det = determinant(m);
    if (det != 0) {
        RatMatrix inv = inverse(to_rational(m));
        IntMatrix adj(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational v = inv(i, j) * det;
                if (v.get_den() != 1) throw std::logic_error("adjugate is not integral");
                adj(i, j) = v.get_num();
            }
        return adj;
    }
    // Singular: cofactor expansion.
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Integer cof = determinant(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
        }
    return adj;
}

std::vector<IntVector> null_space(const IntMatrix& input) {
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    RatMatrix a = to_rational(input);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Rational piv = a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
        Integer den = 1;
        for (const auto& x : v) den = lcm(den, x.get_den());
        IntVector iv;
        iv.reserve(cols);
        for (const auto& x : v) iv.push_back(Rational(x * den).get_num());
        basis.push_back(primitive(std::move(iv)));
    }
    return basis;
}

RatVector IncrementalRank::reduce(RatVector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p] == 0) continue;
        Rational f = v[p];
        for (std::size_t j = 0; j < dim_; ++j)
            if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
    return v;
}

bool IncrementalRank::is_independent(const RatVector& v) const {
    if (v.size() != dim_) throw DimensionError("IncrementalRank: vector length mismatch");
    RatVector red = reduce(v);
    for (const auto& x : red)
        if (x != 0) return true;
    return false;
}

bool IncrementalRank::try_add(const RatVector& v) {
    if (v.size() != dim_) throw DimensionError("IncrementalRank: vector length mismatch");
    RatVector red = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && red[p] == 0) ++p;
    if (p == dim_) return false;
    Rational piv = red[p];
    for (auto& x : red) x /= piv;
    // keep earlier rows fully reduced against the new pivot
    for (auto& row : rows_) {
        if (row[p] == 0) continue;
        Rational f = row[p];
        for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * red[j];
    }
    rows_.push_back(std::move(red));
    pivots_.push_back(p);
    return true;
}

}  // namespace perfectforms
