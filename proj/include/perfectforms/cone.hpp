#pragma once

// Facet enumeration for polyhedral cones given by integer generators, by the
// double description method in exact integer arithmetic.

#include "perfectforms/exact.hpp"

#include <cstddef>
#include <vector>

namespace perfectforms {

struct ConeFacet {
    IntVector normal;                  ///< primitive, normal . g >= 0 for every generator g
    std::vector<std::size_t> incident;  ///< indices of generators with normal . g == 0
};

/// Facets of cone(generators) for a full-dimensional cone (generators of
/// rank equal to their length). Results are sorted by normal, so the output
/// does not depend on the generator order. Throws DomainError when the
/// generators do not span the ambient space.
std::vector<ConeFacet> cone_facets(const std::vector<IntVector>& generators);

/// Exact membership test for a full-dimensional cone described by its facets.
bool cone_contains(const std::vector<ConeFacet>& facets, const IntVector& point);

}  // namespace perfectforms
