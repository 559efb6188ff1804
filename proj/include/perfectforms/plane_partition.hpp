#pragma once

// The d = 2 partition of the rational closure of the PSD cone into Voronoi
// domains, viewed on the trace-one plane. Rays x x^t map to points of the
// unit circle; each domain is a triangle.

#include "perfectforms/forms.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace perfectforms {

struct PlaneRay {
    IntVector x;    ///< sign fixed so the last nonzero coordinate is positive
    Rational px;    ///< ((b^2 - a^2) / (a^2 + b^2), 2ab / (a^2 + b^2)) for x = (a, b)
    Rational py;
};

struct PlaneCell {
    QuadForm form;  ///< primitive integral label
    std::size_t depth = 0;  ///< facet crossings from the two central cells
    bool labeled = false;   ///< depth <= labeled_depth
    std::vector<std::size_t> rays;  ///< indices into PlanePartition::rays, in angular order
};

struct PlanePartition {
    std::vector<PlaneRay> rays;  ///< sorted by angle on the circle
    std::vector<PlaneCell> cells;
    /// (cell, ray) pairs with x x^t in the cell's domain, from exact cone
    /// membership against every ray.
    std::vector<std::pair<std::size_t, std::size_t>> incidences;
};

/// Cells up to `depth` crossings from (2,1;1,2) and (2,-1;-1,2). Cells up
/// to `labeled_depth` are flagged as labeled.
PlanePartition trace_plane_partition(std::size_t depth = 2, std::size_t labeled_depth = 1);

/// Sign normalization used for plane rays.
IntVector last_positive(IntVector x);

}  // namespace perfectforms
