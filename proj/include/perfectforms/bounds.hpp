#pragma once

// Explicit volume and counting bounds for perfect forms, evaluated in
// natural-log space at high precision, with an exact symbolic path
// (rational * sqrt(rational) * pi^k) for cross-checking.

#include "perfectforms/bigfloat.hpp"
#include "perfectforms/exact.hpp"

#include <cstddef>

namespace perfectforms {

/// coefficient * sqrt(radicand) * pi^pi_power, exactly.
struct ClosedForm {
    Rational coefficient{1};
    Rational radicand{1};
    long pi_power = 0;

    [[nodiscard]] BigFloat value(unsigned bits = precision_bits()) const;
    [[nodiscard]] BigFloat log(unsigned bits = precision_bits()) const;
};

/// ln vol_n(B^n) = (n/2) ln pi - ln Gamma(n/2 + 1). Throws for n < 1.
BigFloat ball_volume_log(std::size_t n, unsigned bits = precision_bits());

/// Per-domain volume lower bound ell_d = (1/n!) 2^{(n-d)/2} / (d^3(d+7)/8)^n.
BigFloat ell_d(std::size_t d, unsigned bits = precision_bits());
ClosedForm ell_d_exact(std::size_t d);
/// ell_d as an element of Q(sqrt 2).
QSqrt2 ell_d_sqrt2(std::size_t d);

/// Volume of the cone over the trace-one section of the PSD cone, bounded
/// by the cone over an (n-1)-ball of radius sqrt((d-1)/d) at height 1/sqrt(d).
BigFloat u_d(std::size_t d, unsigned bits = precision_bits());
ClosedForm u_d_exact(std::size_t d);

/// Closed form of the bound on the number of perfect forms, evaluated
/// directly (not as u_d / ell_d).
BigFloat pd_upper_bound(std::size_t d, unsigned bits = precision_bits());
ClosedForm pd_upper_bound_exact(std::size_t d);

/// 2^{-(n + d/2)} (d^3(d+7))^{n/2}, the bound on lambda_1 of primitive
/// integral perfect forms.
BigFloat lambda1_upper_bound(std::size_t d, unsigned bits = precision_bits());
ClosedForm lambda1_upper_bound_exact(std::size_t d);

/// Radius sqrt((d-1)/d) of the ball enclosing the trace-one PSD section.
BigFloat trace_section_radius(std::size_t d, unsigned bits = precision_bits());

/// All log-values are natural logarithms.
struct BoundReport {
    std::size_t d = 0;
    std::size_t n = 0;
    BigFloat log_ell;
    BigFloat log_u;
    BigFloat log_pd_bound;
    BigFloat log_lambda1_bound;
};

BoundReport bound_report(std::size_t d, unsigned bits = precision_bits());

inline Rational field_abs(const Rational& x) { return abs(x); }
inline QSqrt2 field_abs(const QSqrt2& x) { return x.abs(); }

Integer factorial(std::size_t n);

/// (1/n!) |det| of n points in R^n given as matrix rows.
template <typename Field>
Field simplex_volume(const Matrix<Field>& points) {
    if (!points.square()) throw DimensionError("simplex_volume: need n points in R^n");
    return field_abs(determinant(points)) / Field(Rational(factorial(points.rows())));
}

}  // namespace perfectforms
