#pragma once

#include "perfectforms/forms.hpp"

namespace perfectforms::detail {

// Exact LDL^t of a Gram matrix: G = L diag(r) L^t with L unit lower
// triangular, L(i, j) = mu(i, j). r(k) is the squared length of the k-th
// Gram-Schmidt vector.
struct GramSchmidt {
    RatVector r;
    RatMatrix mu;
};

inline GramSchmidt gram_schmidt(const RatMatrix& g) {
    const std::size_t d = g.rows();
    GramSchmidt gs{RatVector(d, Rational(0)), RatMatrix::identity(d)};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= gs.mu(j, k) * gs.mu(i, k) * gs.r[k];
            if (gs.r[j] == 0) throw DomainError("Gram-Schmidt on a degenerate Gram matrix");
            gs.mu(i, j) = s / gs.r[j];
        }
        Rational s = g(i, i);
        for (std::size_t k = 0; k < i; ++k) s -= gs.mu(i, k) * gs.mu(i, k) * gs.r[k];
        gs.r[i] = s;
    }
    return gs;
}

}  // namespace perfectforms::detail
