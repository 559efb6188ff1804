#include "perfectforms/plane_partition.hpp"

#include "perfectforms/perfection.hpp"
#include "perfectforms/voronoi_walk.hpp"

#include <algorithm>
#include <deque>

namespace perfectforms {
namespace {

// Angular order of upper half-plane directions starting at (1, 0).
bool angle_less(const IntVector& u, const IntVector& v) { return u[0] * v[1] - u[1] * v[0] > 0; }

PlaneRay make_ray(const IntVector& x) {
    const Integer& a = x[0];
    const Integer& b = x[1];
    Rational norm(a * a + b * b);
    return {x, Rational(b * b - a * a) / norm, Rational(2 * a * b) / norm};
}

}  // namespace

IntVector last_positive(IntVector x) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] == 0) continue;
        if (x[i] < 0)
            for (auto& c : x) c = -c;
        break;
    }
    return x;
}

PlanePartition trace_plane_partition(std::size_t depth, std::size_t labeled_depth) {
    struct Node {
        QuadForm normalized;
        std::size_t depth;
        VoronoiDomain domain;
    };
    std::vector<Node> nodes;
    std::deque<std::size_t> pending;
    auto admit = [&](const QuadForm& q, std::size_t k) {
        QuadForm normalized = q.scaled(1 / arithmetical_minimum(q).form_min);
        for (const auto& n : nodes)
            if (n.normalized == normalized) return;
        nodes.push_back({normalized, k, voronoi_domain(normalized, true)});
        pending.push_back(nodes.size() - 1);
    };
    admit(QuadForm(IntMatrix{{2, 1}, {1, 2}}), 0);
    admit(QuadForm(IntMatrix{{2, -1}, {-1, 2}}), 0);
    while (!pending.empty()) {
        const std::size_t idx = pending.front();
        pending.pop_front();
        if (nodes[idx].depth >= depth) continue;
        const QuadForm form = nodes[idx].normalized;
        const std::size_t k = nodes[idx].depth;
        const auto facets = *nodes[idx].domain.facets;
        for (const auto& f : facets) admit(contiguous_form(form, f.functional), k + 1);
    }

    PlanePartition out;
    std::vector<IntVector> xs;
    for (const auto& n : nodes)
        for (const auto& g : n.domain.generators) xs.push_back(last_positive(g));
    std::sort(xs.begin(), xs.end(), angle_less);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const auto& x : xs) out.rays.push_back(make_ray(x));

    for (std::size_t c = 0; c < nodes.size(); ++c) {
        const Node& n = nodes[c];
        PlaneCell cell{primitive_integral(n.normalized), n.depth, n.depth <= labeled_depth, {}};
        for (std::size_t r = 0; r < xs.size(); ++r) {
            if (!domain_contains(n.domain, QuadForm::outer(xs[r]))) continue;
            cell.rays.push_back(r);
            out.incidences.emplace_back(c, r);
        }
        out.cells.push_back(std::move(cell));
    }
    return out;
}

}  // namespace perfectforms
