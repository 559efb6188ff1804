#pragma once

// Test-side reference implementations, written independently of the
// library's algorithms: exhaustive box search, cofactor determinants,
// fraction-free rank. Slow but obviously correct.

#include "perfectforms/forms.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using perfectforms::Integer;
using perfectforms::IntMatrix;
using perfectforms::IntVector;
using perfectforms::QuadForm;
using perfectforms::Rational;
using perfectforms::RatMatrix;

inline Rational value(const QuadForm& q, const IntVector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) s += q(i, j) * Rational(x[i] * x[j]);
    return s;
}

// Cofactor expansion along the first row.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][c] * cofactor_det(minor);
        det += (c % 2 == 0) ? term : T(-term);
    }
    return det;
}

inline std::vector<std::vector<Rational>> rows_of(const QuadForm& q) {
    std::vector<std::vector<Rational>> m(q.dim(), std::vector<Rational>(q.dim()));
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) m[i][j] = q(i, j);
    return m;
}

// (Q^{-1})_ii = minor_ii / det.
inline Rational inverse_diagonal(const QuadForm& q, std::size_t i) {
    auto m = rows_of(q);
    Rational det = cofactor_det(m);
    m.erase(m.begin() + static_cast<long>(i));
    for (auto& row : m) row.erase(row.begin() + static_cast<long>(i));
    return cofactor_det(m) / det;
}

inline Integer isqrt_floor(const Rational& b) {
    if (b <= 0) return 0;
    mpz_class f = b.get_num() / b.get_den();
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r;
}

inline bool first_nonzero_positive(const IntVector& x) {
    for (const auto& c : x)
        if (c != 0) return c > 0;
    return false;
}

// Every x with Q[x] <= bound satisfies x_i^2 <= bound * (Q^{-1})_ii, so the
// box below is exhaustive.
inline std::vector<Integer> box_radii(const QuadForm& q, const Rational& bound) {
    std::vector<Integer> radius(q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) radius[i] = isqrt_floor(bound * inverse_diagonal(q, i));
    return radius;
}

// Number of lattice points box_search visits.
inline double box_volume(const QuadForm& q, const Rational& bound) {
    double v = 1;
    for (const auto& r : box_radii(q, bound)) v *= 2 * r.get_d() + 1;
    return v;
}

inline std::vector<IntVector> box_search(const QuadForm& q, const Rational& bound) {
    const std::size_t d = q.dim();
    std::vector<Integer> radius = box_radii(q, bound);
    std::vector<IntVector> out;
    IntVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = -radius[i];
    while (true) {
        if (first_nonzero_positive(x) && value(q, x) <= bound) out.push_back(x);
        std::size_t k = 0;
        while (k < d && x[k] == radius[k]) {
            x[k] = -radius[k];
            ++k;
        }
        if (k == d) break;
        ++x[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rank by fraction-free elimination on a copy.
inline std::size_t rank_of(std::vector<IntVector> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Integer a = rows[rank][c], b = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = a * rows[r][k] - b * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// lambda_1..lambda_d by exhaustive search: sort all vectors up to max Q_ii
// (the unit vectors attain those values) and extend rank greedily.
inline std::vector<Rational> successive_minima(const QuadForm& q) {
    Rational top = q(0, 0);
    for (std::size_t i = 1; i < q.dim(); ++i) top = std::max(top, Rational(q(i, i)));
    auto xs = box_search(q, top);
    std::stable_sort(xs.begin(), xs.end(), [&](const IntVector& a, const IntVector& b) { return value(q, a) < value(q, b); });
    std::vector<Rational> mins;
    std::vector<IntVector> kept;
    for (const auto& x : xs) {
        kept.push_back(x);
        if (rank_of(kept) == kept.size()) {
            mins.push_back(value(q, x));
            if (mins.size() == q.dim()) break;
        } else {
            kept.pop_back();
        }
    }
    return mins;
}

inline Rational minimum(const QuadForm& q) {
    Rational top = q(0, 0);
    for (std::size_t i = 1; i < q.dim(); ++i) top = std::min(top, Rational(q(i, i)));
    Rational best = top;
    for (const auto& x : box_search(q, top)) best = std::min(best, value(q, x));
    return best;
}

inline std::vector<IntVector> minimal_vectors(const QuadForm& q) {
    Rational m = minimum(q);
    std::vector<IntVector> out;
    for (auto& x : box_search(q, m))
        if (value(q, x) == m) out.push_back(x);
    return out;
}

inline IntVector negate(IntVector x) {
    for (auto& c : x) c = -c;
    return x;
}

// ---------------------------------------------------------------------------
// Generators

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Product of random elementary matrices.
inline IntMatrix random_unimodular(Rng& rng, std::size_t d, int steps, long max_mult) {
    IntMatrix u = IntMatrix::identity(d);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
        if (i == j) {
            if (uniform(rng, 0, 3) == 0)
                for (std::size_t r = 0; r < d; ++r) u(r, i) = -u(r, i);
            continue;
        }
        long c = uniform(rng, -max_mult, max_mult);
        for (std::size_t r = 0; r < d; ++r) u(r, j) += c * u(r, i);
    }
    return u;
}

// B^t B + D for a random integer B with entries in [-e, e] and a diagonal
// D >= I, so the result is positive definite and Q^{-1} <= I.
inline QuadForm random_pd_form(Rng& rng, std::size_t d, long e) {
    while (true) {
        IntMatrix b(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) b(i, j) = uniform(rng, -e, e);
        IntMatrix g = b.transpose() * b;
        for (std::size_t i = 0; i < d; ++i) g(i, i) += uniform(rng, 1, e);
        return QuadForm(g);
    }
}

// Symmetric with entries in [-e, e], kept only when positive definite.
inline QuadForm random_small_pd_form(Rng& rng, std::size_t d, long e) {
    while (true) {
        IntMatrix g(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            g(i, i) = uniform(rng, 1, e);
            for (std::size_t j = i + 1; j < d; ++j) g(i, j) = g(j, i) = uniform(rng, -e, e);
        }
        QuadForm q(g);
        // Sylvester's criterion with cofactor determinants.
        bool pd = true;
        for (std::size_t k = 1; k <= d && pd; ++k) {
            std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m[i][j] = q(i, j);
            pd = cofactor_det(m) > 0;
        }
        if (pd) return q;
    }
}

inline QuadForm conjugate(const QuadForm& q, const IntMatrix& u) {
    RatMatrix ur = perfectforms::to_rational(u);
    return QuadForm(ur.transpose() * q.matrix() * ur);
}

}  // namespace oracle
