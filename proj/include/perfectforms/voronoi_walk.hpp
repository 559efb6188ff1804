#pragma once

// Voronoi's algorithm: classification of perfect forms up to similarity by
// walking the graph of contiguous Voronoi domains, with an exact
// equivalence test for deduplication.

#include "perfectforms/forms.hpp"
#include "perfectforms/perfection.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace perfectforms {

inline constexpr std::size_t kDefaultWalkCap = 5;
inline constexpr std::size_t kMaxWalkCap = 6;

class CapExceededError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The contiguity search did not produce a perfect neighbour.
class WalkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Similarity invariants: forms with different keys are never equivalent
/// up to scale.
struct InvariantKey {
    std::size_t dim = 0;
    Rational normalized_det;   ///< det(Q / lambda1)
    std::size_t min_count = 0;  ///< |Min Q| / +-
    RatVector gram_values;     ///< sorted |x^t Q y| / lambda1 over pairs of minimal vectors

    friend bool operator==(const InvariantKey& a, const InvariantKey& b);
    friend bool operator<(const InvariantKey& a, const InvariantKey& b);
};

InvariantKey invariant_key(const QuadForm& q);

struct PerfectFormClass {
    QuadForm representative;  ///< primitive integral, LLL-reduced
    Rational lambda1;
    Rational det;
    std::size_t min_count = 0;
    InvariantKey key;
    std::size_t path_length = 0;  ///< facet crossings from the seed
};

/// The perfect form on the other side of the facet of V(q) with inner
/// normal `facet` (F[x] >= 0 on Min q). Returns q + t* F for the least t* > 0
/// at which new minimal vectors appear; the result has the same minimum
/// as q. Throws DomainError if `facet` is not a facet of V(q) and WalkError
/// if the search fails.
QuadForm contiguous_form(const QuadForm& q, const QuadForm& facet);

struct Similarity {
    UnimodularMatrix transform;  ///< U with U^t q1 U == alpha q2
    Rational alpha;
};

/// Decides whether q1 is arithmetically equivalent to a positive multiple of
/// q2, by backtracking over images of a fixed independent set of short
/// vectors of q2 inside the short vectors of q1.
std::optional<Similarity> equivalent_up_to_scale(const QuadForm& q1, const QuadForm& q2);

struct WalkOptions {
    std::size_t cap = kDefaultWalkCap;
    /// Worker threads used to cross the facets of one domain; 0 picks the
    /// hardware concurrency.
    std::size_t threads = 0;
    /// Called once per newly discovered class, in discovery order.
    std::function<void(const PerfectFormClass&)> on_discovered;
};

/// The A_d root form (2 on the diagonal, 1 elsewhere).
QuadForm root_form_a(std::size_t d);

/// All perfect forms of dimension d up to similarity, seeded with A_d and
/// sorted by invariant key. Throws CapExceededError unless 2 <= d <= cap
/// and cap <= kMaxWalkCap.
std::vector<PerfectFormClass> enumerate_perfect_forms(std::size_t d, const WalkOptions& options = {});

}  // namespace perfectforms
