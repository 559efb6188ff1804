#include "perfectforms/enumeration.hpp"

#include "detail/gram_schmidt.hpp"
#include "perfectforms/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace perfectforms {
namespace {

struct Found {
    IntVector x;
    Rational value;
};

// Fincke-Pohst style enumeration on a fixed form. Collects every y != 0
// with Q[y] <= bound whose last nonzero coordinate is positive.
class Enumerator {
public:
    Enumerator(const QuadForm& q, Rational bound)
        : d_(q.dim()), gs_(detail::gram_schmidt(q.matrix())), bound_(std::move(bound)), x_(d_, Integer(0)) {}

    std::vector<Found> run() {
        descend(d_, bound_, true);
        return std::move(out_);
    }

private:
    // Level k (0-based) is the next coordinate to fix; coordinates > k are set.
    void descend(std::size_t level, const Rational& remaining, bool prefix_zero) {
        if (level == 0) {
            if (prefix_zero) return;
            out_.push_back({x_, bound_ - remaining});
            return;
        }
        const std::size_t k = level - 1;
        Rational center = 0;
        for (std::size_t i = k + 1; i < d_; ++i)
            if (x_[i] != 0) center += gs_.mu(i, k) * x_[i];

        auto cost = [&](const Integer& t) -> Rational {
            Rational s = center + t;
            return gs_.r[k] * s * s;
        };

        if (prefix_zero) {
            // center is 0; only t >= 0 to pick one vector per +-pair
            for (Integer t = 0;; ++t) {
                Rational c = cost(t);
                if (c > remaining) break;
                x_[k] = t;
                descend(k, remaining - c, t == 0);
            }
        } else {
            Integer mid = round_nearest(-center);
            for (Integer t = mid;; ++t) {
                Rational c = cost(t);
                if (c > remaining) break;
                x_[k] = t;
                descend(k, remaining - c, false);
            }
            for (Integer t = mid - 1;; --t) {
                Rational c = cost(t);
                if (c > remaining) break;
                x_[k] = t;
                descend(k, remaining - c, false);
            }
        }
        x_[k] = 0;
    }

    std::size_t d_;
    detail::GramSchmidt gs_;
    Rational bound_;
    IntVector x_;
    std::vector<Found> out_;
};

bool by_value_then_lex(const Found& a, const Found& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.x < b.x;
}

std::vector<Found> enumerate_below(const QuadForm& q, const Rational& bound) {
    require_positive_definite(q, "vectors_below");
    if (bound <= 0) throw DomainError("vectors_below: bound must be positive");
    ReductionResult red = lll_reduce(q);
    std::vector<Found> found = Enumerator(red.reduced, bound).run();
    for (auto& f : found) f.x = lex_positive(red.transform.apply(f.x));
    std::sort(found.begin(), found.end(), by_value_then_lex);
    return found;
}

}  // namespace

std::vector<IntVector> vectors_below(const QuadForm& q, const Rational& bound) {
    std::vector<IntVector> out;
    for (auto& f : enumerate_below(q, bound)) out.push_back(std::move(f.x));
    return out;
}

MinimalVectorSet arithmetical_minimum(const QuadForm& q) {
    require_positive_definite(q, "arithmetical_minimum");
    // Every diagonal entry of the LLL-reduced form is attained, so the
    // smallest one bounds lambda_1 from above.
    ReductionResult red = lll_reduce(q);
    Rational radius = red.reduced(0, 0);
    for (std::size_t i = 1; i < q.dim(); ++i) radius = std::min(radius, Rational(red.reduced(i, i)));
    std::vector<Found> found = Enumerator(red.reduced, radius).run();
    if (found.empty()) throw std::logic_error("arithmetical_minimum: enumeration returned no vectors");
    MinimalVectorSet result;
    result.form_min = found.front().value;
    for (const auto& f : found) result.form_min = std::min(result.form_min, f.value);
    for (const auto& f : found)
        if (f.value == result.form_min) result.vectors.push_back(lex_positive(red.transform.apply(f.x)));
    std::sort(result.vectors.begin(), result.vectors.end());
    return result;
}

SuccessiveMinima successive_minima(const QuadForm& q, std::size_t k) {
    require_positive_definite(q, "successive_minima");
    if (k < 1 || k > q.dim()) throw std::out_of_range("successive_minima: k must lie in [1, dim]");
    ReductionResult red = lll_reduce(q);
    Rational lo = red.reduced(0, 0);
    Rational hi = red.reduced(0, 0);
    for (std::size_t i = 1; i < q.dim(); ++i) {
        lo = std::min(lo, Rational(red.reduced(i, i)));
        hi = std::max(hi, Rational(red.reduced(i, i)));
    }
    // The reduced basis itself spans rank d within radius hi.
    for (Rational radius = lo;; radius = std::min(Rational(2 * radius), hi)) {
        SuccessiveMinima sm;
        IncrementalRank acc(q.dim());
        for (const auto& f : enumerate_below(q, radius)) {
            if (!acc.try_add(f.x)) continue;
            sm.values.push_back(f.value);
            sm.witnesses.push_back(f.x);
            if (sm.values.size() == k) return sm;
        }
        if (radius == hi) throw std::logic_error("successive_minima: rank deficient at the basis radius");
    }
}

}  // namespace perfectforms
