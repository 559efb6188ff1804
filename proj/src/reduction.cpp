#include "perfectforms/reduction.hpp"

#include "detail/gram_schmidt.hpp"

#include <algorithm>
#include <stdexcept>

namespace perfectforms {
namespace {

const Rational kLovaszDelta(3, 4);

// A basis under reduction: the Gram matrix of the current basis and the
// integer matrix whose columns express it in the original coordinates.
struct WorkingBasis {
    RatMatrix gram;
    IntMatrix basis;

    explicit WorkingBasis(const QuadForm& q) : gram(q.matrix()), basis(IntMatrix::identity(q.dim())) {}

    [[nodiscard]] std::size_t dim() const { return gram.rows(); }

    // b_k -= c * b_j
    void subtract(std::size_t k, std::size_t j, const Integer& c) {
        const std::size_t d = dim();
        for (std::size_t i = 0; i < d; ++i) gram(i, k) -= c * gram(i, j);
        for (std::size_t i = 0; i < d; ++i) gram(k, i) -= c * gram(j, i);
        for (std::size_t i = 0; i < d; ++i) basis(i, k) -= c * basis(i, j);
    }

    void swap(std::size_t a, std::size_t b) {
        const std::size_t d = dim();
        for (std::size_t i = 0; i < d; ++i) std::swap(gram(i, a), gram(i, b));
        for (std::size_t i = 0; i < d; ++i) std::swap(gram(a, i), gram(b, i));
        for (std::size_t i = 0; i < d; ++i) std::swap(basis(i, a), basis(i, b));
    }

    // Size-reduces b_k against b_{k-1}, ..., b_0, keeping mu row k current.
    void size_reduce(std::size_t k, detail::GramSchmidt& gs) {
        for (std::size_t jj = k; jj-- > 0;) {
            Integer c = round_nearest(gs.mu(k, jj));
            if (c == 0) continue;
            subtract(k, jj, c);
            for (std::size_t i = 0; i < jj; ++i) gs.mu(k, i) -= c * gs.mu(jj, i);
            gs.mu(k, jj) -= c;
        }
    }

    [[nodiscard]] ReductionResult result() const {
        return {QuadForm(gram), UnimodularMatrix(basis)};
    }
};

void run_lll(WorkingBasis& wb) {
    const std::size_t d = wb.dim();
    std::size_t k = 1;
    while (k < d) {
        detail::GramSchmidt gs = detail::gram_schmidt(wb.gram);
        wb.size_reduce(k, gs);
        const Rational& m = gs.mu(k, k - 1);
        if (gs.r[k] >= (kLovaszDelta - m * m) * gs.r[k - 1]) {
            ++k;
        } else {
            wb.swap(k, k - 1);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

void size_reduce_all(WorkingBasis& wb) {
    detail::GramSchmidt gs = detail::gram_schmidt(wb.gram);
    for (std::size_t k = 1; k < wb.dim(); ++k) wb.size_reduce(k, gs);
}

// Gram matrix of the projections of b_2..b_d orthogonally to b_1.
QuadForm project_out_first(const QuadForm& q) {
    const std::size_t d = q.dim();
    RatMatrix p(d - 1, d - 1);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j) p(i - 1, j - 1) = q(i, j) - q(i, 0) * q(0, j) / q(0, 0);
    return QuadForm(std::move(p));
}

UnimodularMatrix hkz_transform(const QuadForm& q) {
    const std::size_t d = q.dim();
    if (d == 1) return UnimodularMatrix::identity(1);

    MinimalVectorSet mins = arithmetical_minimum(q);
    UnimodularMatrix first = complete_to_basis(mins.vectors.front());
    QuadForm q1 = apply_unimodular(q, first);

    UnimodularMatrix rest = hkz_transform(project_out_first(q1));
    IntMatrix lift = IntMatrix::identity(d);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j) lift(i, j) = rest(i - 1, j - 1);
    return first * UnimodularMatrix(std::move(lift));
}

}  // namespace

ReductionResult lll_reduce(const QuadForm& q) {
    require_positive_definite(q, "lll_reduce");
    WorkingBasis wb(q);
    run_lll(wb);
    return wb.result();
}

bool is_lll_reduced(const QuadForm& q) {
    detail::GramSchmidt gs = detail::gram_schmidt(q.matrix());
    const Rational half(1, 2);
    for (std::size_t i = 1; i < q.dim(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (abs(gs.mu(i, j)) > half) return false;
        const Rational& m = gs.mu(i, i - 1);
        if (gs.r[i] < (kLovaszDelta - m * m) * gs.r[i - 1]) return false;
    }
    return true;
}

ReductionResult hkz_reduce(const QuadForm& q) {
    require_positive_definite(q, "hkz_reduce");
    UnimodularMatrix u = hkz_transform(q);
    WorkingBasis wb(apply_unimodular(q, u));
    size_reduce_all(wb);
    ReductionResult sized = wb.result();
    return {sized.reduced, u * sized.transform};
}

Rational small_vector_bound(std::size_t d) {
    Integer dd(static_cast<unsigned long>(d));
    return ratio(dd * dd * dd * (dd + 7), 8);
}

SmallRepresentative small_minvec_representative(const QuadForm& q) {
    require_positive_definite(q, "small_minvec_representative");
    ReductionResult dual_hkz = hkz_reduce(dual(q));
    UnimodularMatrix u = dual_hkz.transform.inverse_transpose();
    QuadForm rep = apply_unimodular(q, u);
    if (dual(rep) != dual_hkz.reduced) throw std::logic_error("small_minvec_representative: dual transport mismatch");

    SmallRepresentative out{{rep, u}, 0, 0, arithmetical_minimum(rep), 0, 0, small_vector_bound(q.dim())};
    out.lambda1 = out.minimal_vectors.form_min;
    out.scale = 1 / out.lambda1;
    for (const auto& x : out.minimal_vectors.vectors) out.max_norm = std::max(out.max_norm, dot(x, x));
    // (scale * Q')^{-1} = lambda1 * Q'^{-1}
    out.dual_trace = dual_hkz.reduced.trace() * out.lambda1;
    return out;
}

TransferenceReport transference_check(const QuadForm& q) {
    require_positive_definite(q, "transference_check");
    const std::size_t d = q.dim();
    TransferenceReport rep{successive_minima(q, d), successive_minima(dual(q), d), {}, 0, true};
    rep.bound = Rational(static_cast<long>(d * d));
    for (std::size_t i = 0; i < d; ++i) {
        Rational p = rep.primal.values[i] * rep.dual.values[d - 1 - i];
        if (p > rep.bound) rep.holds = false;
        rep.products.push_back(std::move(p));
    }
    return rep;
}

UnimodularMatrix complete_to_basis(const IntVector& v) {
    const std::size_t d = v.size();
    if (d == 0) throw DimensionError("complete_to_basis: empty vector");
    IntMatrix m = IntMatrix::identity(d);
    IntVector a = v;
    for (std::size_t i = d - 1; i >= 1; --i) {
        if (a[i] != 0) {
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[i - 1].get_mpz_t(), a[i].get_mpz_t());
            Integer p = a[i - 1] / g;
            Integer r = a[i] / g;
            // [[s, t], [-r, p]] has determinant 1
            for (std::size_t j = 0; j < d; ++j) {
                Integer top = s * m(i - 1, j) + t * m(i, j);
                Integer bottom = -r * m(i - 1, j) + p * m(i, j);
                m(i - 1, j) = std::move(top);
                m(i, j) = std::move(bottom);
            }
            a[i - 1] = g;
            a[i] = 0;
        }
    }
    if (abs(a[0]) != 1) throw DomainError("complete_to_basis: vector is not primitive");
    if (a[0] < 0)
        for (std::size_t j = 0; j < d; ++j) m(0, j) = -m(0, j);
    // m v = e_1, hence m^{-1} e_1 = v
    return UnimodularMatrix(m).inverse();
}

}  // namespace perfectforms
