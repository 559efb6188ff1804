#pragma once

// Exact short-vector enumeration for positive definite forms: the
// arithmetical minimum, minimal vectors, successive minima, and all vectors
// below a bound.

#include "perfectforms/forms.hpp"

#include <cstddef>
#include <vector>

namespace perfectforms {

/// lambda_1(Q) together with Min Q, one lexicographically positive
/// representative per +-pair, sorted lexicographically.
struct MinimalVectorSet {
    Rational form_min;
    std::vector<IntVector> vectors;

    [[nodiscard]] std::size_t count() const { return vectors.size(); }
};

/// lambda_1..lambda_k with linearly independent witnesses,
/// Q[witnesses[i]] == values[i].
struct SuccessiveMinima {
    RatVector values;
    std::vector<IntVector> witnesses;
};

/// All x != 0 with Q[x] <= bound, one lexicographically positive
/// representative per +-pair, sorted by (Q[x], x).
///
/// The search is a depth-first walk over the coordinates of an LLL-reduced
/// equivalent form, pruned with its exact LDL^t decomposition; every branch
/// whose partial sum stays within the bound is visited, so the result is
/// complete. Throws DomainError for non-positive-definite input or bound <= 0.
std::vector<IntVector> vectors_below(const QuadForm& q, const Rational& bound);

MinimalVectorSet arithmetical_minimum(const QuadForm& q);

/// Greedy rank extension over vectors_below with a doubling bound. Ties are
/// broken by (Q[x], x). Throws DomainError for non-PD input and
/// std::out_of_range unless 1 <= k <= dim.
SuccessiveMinima successive_minima(const QuadForm& q, std::size_t k);

}  // namespace perfectforms
