#pragma once

// LLL and HKZ reduction of quadratic forms with recorded unimodular
// transforms, the short-minimal-vector representative, and the
// Banaszczyk transference check.

#include "perfectforms/enumeration.hpp"
#include "perfectforms/forms.hpp"

namespace perfectforms {

/// reduced == apply_unimodular(original, transform).
struct ReductionResult {
    QuadForm reduced;
    UnimodularMatrix transform;
};

/// LLL with delta = 3/4, carried out exactly on the Gram matrix.
ReductionResult lll_reduce(const QuadForm& q);

/// Size-reduced (|mu_ij| <= 1/2) and Lovasz condition with delta = 3/4.
bool is_lll_reduced(const QuadForm& q);

/// HKZ reduction: the first basis vector is a shortest vector, the rest is
/// recursively HKZ-reduced in the orthogonal projection, and the result is
/// size-reduced. Satisfies Q'_ii <= (i+3)/4 * lambda_i(Q) (1-based i).
ReductionResult hkz_reduce(const QuadForm& q);

/// d^3 (d+7) / 8.
Rational small_vector_bound(std::size_t d);

/// An equivalent form whose minimal vectors are short in the Euclidean sense.
struct SmallRepresentative {
    ReductionResult result;
    Rational lambda1;                 ///< lambda_1 of the (unscaled) representative
    Rational scale;                   ///< 1 / lambda1, normalizes the minimum to 1
    MinimalVectorSet minimal_vectors;  ///< of result.reduced
    Integer max_norm;                 ///< max x^t x over the minimal vectors
    Rational dual_trace;              ///< Tr((scale * Q')^{-1})
    Rational bound;                   ///< small_vector_bound(d)

    [[nodiscard]] bool within_bound() const { return Rational(max_norm) <= bound && dual_trace <= bound; }
};

/// HKZ-reduces the dual form and transports the transform back with U^{-t}.
SmallRepresentative small_minvec_representative(const QuadForm& q);

struct TransferenceReport {
    SuccessiveMinima primal;
    SuccessiveMinima dual;
    RatVector products;  ///< lambda_i(Q) * lambda_{d-i+1}(Q^{-1})
    Rational bound;      ///< d^2
    bool holds = false;
};

TransferenceReport transference_check(const QuadForm& q);

/// A unimodular matrix whose first column is the given primitive vector.
/// Throws DomainError when the vector is not primitive.
UnimodularMatrix complete_to_basis(const IntVector& v);

}  // namespace perfectforms
