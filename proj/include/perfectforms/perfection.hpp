#pragma once

// Voronoi domains, perfection certificates, the simplex volume lower bound,
// the disjointness inequality for Voronoi domains, and the integral linear
// system behind the lambda_1 bound for primitive integral perfect forms.

#include "perfectforms/cone.hpp"
#include "perfectforms/enumeration.hpp"
#include "perfectforms/forms.hpp"
#include "perfectforms/reduction.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace perfectforms {

inline constexpr std::size_t kDefaultFacetCap = 5;

/// Thrown when a perfect form is required.
class NotPerfectError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A facet of a Voronoi domain: a symmetric functional F with
/// <F, x x^t> = F[x] >= 0 for every minimal vector x, vanishing exactly on
/// the generators listed in `incident` (which span rank n - 1).
struct VoronoiFacet {
    QuadForm functional;
    std::vector<std::size_t> incident;
};

struct VoronoiDomain {
    QuadForm source;
    MinimalVectorSet minimal_vectors;
    std::vector<IntVector> generators;  ///< x for each generator x x^t, one per +-pair
    std::size_t rank = 0;
    std::optional<std::vector<VoronoiFacet>> facets;

    [[nodiscard]] bool full_rank() const { return rank == source.n(); }
};

/// Throws DomainError for non-PD input and when facets are requested with
/// dim > facet_cap.
VoronoiDomain voronoi_domain(const QuadForm& q, bool with_facets, std::size_t facet_cap = kDefaultFacetCap);

bool is_perfect(const QuadForm& q);

/// Exact membership of a symmetric matrix in a full-rank Voronoi domain
/// (facets must have been computed).
bool domain_contains(const VoronoiDomain& domain, const QuadForm& point);

struct PerfectionCertificate {
    std::vector<IntVector> subset;  ///< n minimal vectors with independent phi(x x^t)
    Matrix<QSqrt2> w;               ///< rows phi(x x^t / x^t x)
    QSqrt2 det_w;
    QSqrt2 simplex_volume;          ///< |det_w| / n!
};

/// Greedy: scans minimal vectors in lexicographic order and keeps those that
/// raise the rank. Throws NotPerfectError when the rank stays below n.
PerfectionCertificate perfection_certificate(const QuadForm& q);

/// A = (phi'(x_i x_i^t))_i, one row per certificate vector.
struct IntegralSystem {
    IntMatrix matrix_a;
    Integer det_a;
};

IntegralSystem integral_system(const std::vector<IntVector>& vectors);

struct VolumeCheckReport {
    SmallRepresentative representative;
    PerfectionCertificate certificate;
    QSqrt2 ell;        ///< exact ell_d
    bool holds = false;  ///< certificate.simplex_volume >= ell, exact comparison
};

/// Certificate volume of the short-minimal-vector representative against
/// ell_d. Throws NotPerfectError.
VolumeCheckReport volume_lower_bound_check(const QuadForm& q);

struct DisjointnessReport {
    Rational inner_self;   ///< <R, Q1 / lambda1(Q1)>, equals |Min Q1|
    Rational inner_other;  ///< <R, Q2 / lambda1(Q2)>
    bool min_contained = false;  ///< Min Q1 is a subset of Min Q2 (up to sign)
    [[nodiscard]] bool inequality_holds() const { return inner_other >= inner_self; }
    [[nodiscard]] bool strict() const { return inner_other > inner_self; }
};

/// R = sum over Min Q1 of x x^t, an interior point of V(Q1); compares
/// <R, Q2> with <R, Q1> after normalizing both minima to 1.
DisjointnessReport disjointness_inequality(const QuadForm& q1, const QuadForm& q2);

/// gcd of all matrix entries is 1.
bool is_primitive_integral(const QuadForm& q);

struct PrimitivityReport {
    SmallRepresentative representative;
    PerfectionCertificate certificate;
    IntegralSystem system;
    Rational lambda1;
    bool system_solved = false;   ///< A vec(Q') == lambda1 * 1 and adj(A) 1 == (det A / lambda1) vec(Q')
    bool scaled_integral = false;  ///< (det A / lambda1) Q is integral
    bool lambda1_le_det = false;   ///< lambda1 <= |det A|
    /// |det A| <= 2^{(n-d)/2} prod x_i^t x_i (Hadamard for phi rows)
    bool hadamard_product = false;
    /// |det A| <= 2^{(n-d)/2} (d^3(d+7)/8)^{n/2}
    bool hadamard_stated = false;
    /// |det A| <= 2^{(n-d)/2} (d^3(d+7)/8)^n
    bool hadamard_full = false;

    [[nodiscard]] bool passed() const {
        return system_solved && scaled_integral && lambda1_le_det && hadamard_product && hadamard_stated;
    }
};

/// Throws NotPerfectError, or DomainError for non-integral / non-primitive input.
PrimitivityReport primitivity_scaling_check(const QuadForm& q);

}  // namespace perfectforms
