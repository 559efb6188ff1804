#include "perfectforms/perfection.hpp"

#include "perfectforms/bounds.hpp"

#include <algorithm>
#include <string>

namespace perfectforms {
namespace {

void require_perfect(const VoronoiDomain& dom, const char* what) {
    if (!dom.full_rank())
        throw NotPerfectError(std::string(what) + ": form is not perfect (rank " + std::to_string(dom.rank) + " < " +
                              std::to_string(dom.source.n()) + ")");
}

// Symmetric functional with <F, x x^t> = normal . phi'(x x^t).
QuadForm functional_from_normal(std::size_t d, const IntVector& normal) {
    return QuadForm::from_upper(d, to_rational(normal));
}

std::vector<IntVector> lift_generators(const std::vector<IntVector>& xs) {
    std::vector<IntVector> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(phi_prime_outer(x));
    return out;
}

Rational pow_rational(const Rational& b, std::size_t e) {
    Rational r(1);
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

VoronoiDomain voronoi_domain(const QuadForm& q, bool with_facets, std::size_t facet_cap) {
    require_positive_definite(q, "voronoi_domain");
    if (with_facets && q.dim() > facet_cap)
        throw DomainError("voronoi_domain: facet enumeration requested above the dimension cap (" +
                          std::to_string(facet_cap) + ")");
    VoronoiDomain dom{q, arithmetical_minimum(q), {}, 0, std::nullopt};
    dom.generators = dom.minimal_vectors.vectors;
    std::vector<IntVector> lifted = lift_generators(dom.generators);
    IncrementalRank acc(q.n());
    for (const auto& g : lifted) acc.try_add(g);
    dom.rank = acc.rank();
    if (with_facets) {
        if (!dom.full_rank()) throw NotPerfectError("voronoi_domain: facets need a full-rank domain");
        std::vector<VoronoiFacet> facets;
        for (auto& f : cone_facets(lifted)) facets.push_back({functional_from_normal(q.dim(), f.normal), f.incident});
        dom.facets = std::move(facets);
    }
    return dom;
}

bool is_perfect(const QuadForm& q) { return voronoi_domain(q, false).full_rank(); }

bool domain_contains(const VoronoiDomain& domain, const QuadForm& point) {
    if (!domain.facets) throw std::logic_error("domain_contains: facets were not computed");
    return std::all_of(domain.facets->begin(), domain.facets->end(),
                       [&](const VoronoiFacet& f) { return trace_inner(f.functional, point) >= 0; });
}

PerfectionCertificate perfection_certificate(const QuadForm& q) {
    VoronoiDomain dom = voronoi_domain(q, false);
    require_perfect(dom, "perfection_certificate");
    const std::size_t n = q.n();
    PerfectionCertificate cert;
    IncrementalRank acc(n);
    for (const auto& x : dom.generators) {
        if (!acc.try_add(phi_prime_outer(x))) continue;
        cert.subset.push_back(x);
        if (cert.subset.size() == n) break;
    }
    cert.w = Matrix<QSqrt2>(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const IntVector& x = cert.subset[r];
        VectorizedForm row = phi(QuadForm::outer(x).scaled(Rational(1) / Rational(dot(x, x))));
        for (std::size_t c = 0; c < n; ++c) cert.w(r, c) = row.coords[c];
    }
    cert.det_w = determinant(cert.w);
    cert.simplex_volume = simplex_volume(cert.w);
    return cert;
}

IntegralSystem integral_system(const std::vector<IntVector>& vectors) {
    if (vectors.empty()) throw DimensionError("integral_system: no vectors");
    const std::size_t n = triangular_size(vectors.front().size());
    if (vectors.size() != n) throw DimensionError("integral_system: need exactly n = d(d+1)/2 vectors");
    IntegralSystem sys{IntMatrix(n, n), 0};
    for (std::size_t r = 0; r < n; ++r) {
        IntVector row = phi_prime_outer(vectors[r]);
        for (std::size_t c = 0; c < n; ++c) sys.matrix_a(r, c) = row[c];
    }
    sys.det_a = determinant(sys.matrix_a);
    return sys;
}

VolumeCheckReport volume_lower_bound_check(const QuadForm& q) {
    if (!is_perfect(q)) throw NotPerfectError("volume_lower_bound_check: form is not perfect");
    VolumeCheckReport rep{small_minvec_representative(q), {}, ell_d_sqrt2(q.dim()), false};
    rep.certificate = perfection_certificate(rep.representative.result.reduced);
    rep.holds = rep.certificate.simplex_volume >= rep.ell;
    return rep;
}

DisjointnessReport disjointness_inequality(const QuadForm& q1, const QuadForm& q2) {
    if (q1.dim() != q2.dim()) throw DimensionError("disjointness_inequality: forms of different dimension");
    VoronoiDomain d1 = voronoi_domain(q1, false);
    VoronoiDomain d2 = voronoi_domain(q2, false);
    require_perfect(d1, "disjointness_inequality");
    require_perfect(d2, "disjointness_inequality");
    QuadForm n1 = q1.scaled(1 / d1.minimal_vectors.form_min);
    QuadForm n2 = q2.scaled(1 / d2.minimal_vectors.form_min);
    DisjointnessReport rep;
    rep.min_contained = true;
    for (const auto& x : d1.generators) {
        rep.inner_self += evaluate(n1, x);
        rep.inner_other += evaluate(n2, x);
        if (!std::binary_search(d2.generators.begin(), d2.generators.end(), x)) rep.min_contained = false;
    }
    return rep;
}

bool is_primitive_integral(const QuadForm& q) {
    auto m = q.integer_matrix();
    if (!m) return false;
    Integer g = 0;
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) g = gcd(g, (*m)(i, j));
    return g == 1;
}

PrimitivityReport primitivity_scaling_check(const QuadForm& q) {
    if (!q.is_integral()) throw DomainError("primitivity_scaling_check: form is not integral");
    if (!is_primitive_integral(q)) throw DomainError("primitivity_scaling_check: form is not primitive");
    if (!is_perfect(q)) throw NotPerfectError("primitivity_scaling_check: form is not perfect");

    const std::size_t d = q.dim();
    const std::size_t n = q.n();
    PrimitivityReport rep{small_minvec_representative(q), {}, {}, 0};
    const QuadForm& rep_form = rep.representative.result.reduced;
    rep.lambda1 = rep.representative.lambda1;
    rep.certificate = perfection_certificate(rep_form);
    rep.system = integral_system(rep.certificate.subset);
    const Integer& det_a = rep.system.det_a;

    // A (Q'_ij)_{i<=j} == lambda1 * 1, and adj(A) 1 == (det A / lambda1) (Q'_ij)
    IntMatrix adj = adjugate(rep.system.matrix_a);
    RatVector upper;
    for (auto [i, j] : upper_index_pairs(d)) upper.push_back(rep_form(i, j));
    RatVector lhs = to_rational(rep.system.matrix_a) * upper;
    bool solved = std::all_of(lhs.begin(), lhs.end(), [&](const Rational& v) { return v == rep.lambda1; });
    Rational scale = Rational(det_a) / rep.lambda1;
    for (std::size_t r = 0; r < n && solved; ++r) {
        Integer row_sum = 0;
        for (std::size_t c = 0; c < n; ++c) row_sum += adj(r, c);
        if (Rational(row_sum) != scale * upper[r]) solved = false;
    }
    rep.system_solved = solved;
    rep.scaled_integral = q.scaled(scale).is_integral();
    rep.lambda1_le_det = rep.lambda1 <= Rational(abs(det_a));

    // Squared comparisons keep everything rational.
    const Rational det_sq = Rational(det_a * det_a);
    const Rational two_pow = pow_rational(Rational(2), n - d);
    Rational prod_sq = 1;
    for (const auto& x : rep.certificate.subset) {
        Integer nx = dot(x, x);
        prod_sq *= Rational(nx * nx);
    }
    const Rational l = small_vector_bound(d);
    rep.hadamard_product = det_sq <= two_pow * prod_sq;
    rep.hadamard_stated = det_sq <= two_pow * pow_rational(l, n);
    rep.hadamard_full = det_sq <= two_pow * pow_rational(l, 2 * n);
    return rep;
}

}  // namespace perfectforms
