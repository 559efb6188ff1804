#include "perfectforms/bounds.hpp"

#include "perfectforms/forms.hpp"

namespace perfectforms {
namespace {

void require_dim(std::size_t d, const char* what) {
    if (d < 2) throw DomainError(std::string(what) + ": dimension must be at least 2");
}

Integer as_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

// d^3 (d + 7)
Integer quartic(std::size_t d) {
    Integer dd = as_integer(d);
    return dd * dd * dd * (dd + 7);
}

Rational rational_pow(const Rational& base, std::size_t e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

Rational pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    r.canonicalize();
    return r;
}

// Gamma((n+1)/2) = G * sqrt(pi)^{n even}: returns the rational factor G.
Rational gamma_half_rational(std::size_t n) {
    if (n % 2 == 1) return Rational(factorial((n - 1) / 2));
    // Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi), m = n/2
    const std::size_t m = n / 2;
    return Rational(factorial(2 * m)) / (Rational(factorial(m)) * pow2(2 * static_cast<long>(m)));
}

// pi^{(n-1)/2} / Gamma((n+1)/2) = pi^k / G with this k.
long pi_power_over_gamma(std::size_t n) {
    return static_cast<long>(n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2);
}

BigFloat ln(long v, unsigned bits) { return BigFloat(v, bits).log(); }

}  // namespace

Integer factorial(std::size_t n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigFloat ClosedForm::value(unsigned bits) const {
    BigFloat v = BigFloat(coefficient, bits) * BigFloat(radicand, bits).sqrt();
    BigFloat pi = BigFloat::pi(bits);
    for (long k = 0; k < (pi_power < 0 ? -pi_power : pi_power); ++k) {
        if (pi_power > 0) v *= pi;
        else v /= pi;
    }
    return v;
}

BigFloat ClosedForm::log(unsigned bits) const {
    if (coefficient <= 0 || radicand <= 0) throw DomainError("ClosedForm::log of a non-positive value");
    BigFloat r = BigFloat(coefficient, bits).log();
    r += BigFloat(radicand, bits).log() / BigFloat(2L, bits);
    r += BigFloat(pi_power, bits) * BigFloat::pi(bits).log();
    return r;
}

BigFloat ball_volume_log(std::size_t n, unsigned bits) {
    if (n < 1) throw DomainError("ball_volume_log: n must be at least 1");
    BigFloat half_n = BigFloat(static_cast<long>(n), bits) / BigFloat(2L, bits);
    return half_n * BigFloat::pi(bits).log() - (half_n + BigFloat(1L, bits)).lgamma();
}

// ---------------------------------------------------------------------------
// ell_d

BigFloat ell_d(std::size_t d, unsigned bits) {
    require_dim(d, "ell_d");
    const std::size_t n = triangular_size(d);
    const long ld = static_cast<long>(d);
    BigFloat log_l = BigFloat(ratio(quartic(d), 8), bits).log();
    BigFloat r = -(BigFloat(static_cast<long>(n) + 1, bits).lgamma());
    r += BigFloat(static_cast<long>(n) - ld, bits) / BigFloat(2L, bits) * ln(2, bits);
    r -= BigFloat(static_cast<long>(n), bits) * log_l;
    return r;
}

ClosedForm ell_d_exact(std::size_t d) {
    require_dim(d, "ell_d");
    const std::size_t n = triangular_size(d);
    Rational l = ratio(quartic(d), 8);
    ClosedForm c;
    c.coefficient = 1 / (Rational(factorial(n)) * rational_pow(l, n));
    c.radicand = pow2(static_cast<long>(n - d));
    return c;
}

QSqrt2 ell_d_sqrt2(std::size_t d) {
    require_dim(d, "ell_d");
    const std::size_t n = triangular_size(d);
    Rational l = ratio(quartic(d), 8);
    return QSqrt2::pow_sqrt2(static_cast<long>(n - d)) / QSqrt2(Rational(factorial(n)) * rational_pow(l, n));
}

// ---------------------------------------------------------------------------
// u_d

BigFloat u_d(std::size_t d, unsigned bits) {
    require_dim(d, "u_d");
    const std::size_t n = triangular_size(d);
    const long ln_ = static_cast<long>(n);
    const long ld = static_cast<long>(d);
    BigFloat two(2L, bits);
    BigFloat r = -ln(ln_, bits);
    r -= ln(ld, bits) / two;
    r += BigFloat(ln_ - 1, bits) / two * (ln(ld - 1, bits) - ln(ld, bits));
    r += ball_volume_log(n - 1, bits);
    return r;
}

ClosedForm u_d_exact(std::size_t d) {
    require_dim(d, "u_d");
    const std::size_t n = triangular_size(d);
    ClosedForm c;
    c.coefficient = 1 / (Rational(as_integer(n)) * gamma_half_rational(n));
    c.radicand = Rational(rational_pow(Rational(as_integer(d - 1)), n - 1)) / rational_pow(Rational(as_integer(d)), n);
    c.pi_power = pi_power_over_gamma(n);
    return c;
}

BigFloat trace_section_radius(std::size_t d, unsigned bits) {
    require_dim(d, "trace_section_radius");
    return BigFloat(ratio(as_integer(d - 1), as_integer(d)), bits).sqrt();
}

// ---------------------------------------------------------------------------
// Bound on the number of perfect forms

BigFloat pd_upper_bound(std::size_t d, unsigned bits) {
    require_dim(d, "pd_upper_bound");
    const std::size_t n = triangular_size(d);
    const long ln_ = static_cast<long>(n);
    const long ld = static_cast<long>(d);
    BigFloat two(2L, bits);
    BigFloat r = BigFloat(ln_, bits).lgamma();  // ln (n-1)!
    r -= (BigFloat(ln_ + 1, bits) / two).lgamma();
    BigFloat inner = BigFloat(ln_ - 1, bits) * BigFloat::pi(bits).log();
    inner -= BigFloat(7 * ln_ - ld, bits) * ln(2, bits);
    inner += BigFloat(ln_ - 1, bits) * ln(ld - 1, bits);
    inner -= BigFloat(ln_, bits) * ln(ld, bits);
    r += inner / two;
    r += BigFloat(ln_, bits) * BigFloat(quartic(d), bits).log();
    return r;
}

ClosedForm pd_upper_bound_exact(std::size_t d) {
    require_dim(d, "pd_upper_bound");
    const std::size_t n = triangular_size(d);
    ClosedForm c;
    c.coefficient = Rational(factorial(n - 1)) / gamma_half_rational(n) *
                    rational_pow(Rational(quartic(d)), n);
    c.radicand = rational_pow(Rational(as_integer(d - 1)), n - 1) /
                 (pow2(7 * static_cast<long>(n) - static_cast<long>(d)) * rational_pow(Rational(as_integer(d)), n));
    c.pi_power = pi_power_over_gamma(n);
    return c;
}

// ---------------------------------------------------------------------------
// lambda_1 bound

BigFloat lambda1_upper_bound(std::size_t d, unsigned bits) {
    require_dim(d, "lambda1_upper_bound");
    const std::size_t n = triangular_size(d);
    BigFloat two(2L, bits);
    BigFloat r = -(BigFloat(static_cast<long>(n), bits) + BigFloat(static_cast<long>(d), bits) / two) * ln(2, bits);
    r += BigFloat(static_cast<long>(n), bits) / two * BigFloat(quartic(d), bits).log();
    return r;
}

ClosedForm lambda1_upper_bound_exact(std::size_t d) {
    require_dim(d, "lambda1_upper_bound");
    const std::size_t n = triangular_size(d);
    // squared: 2^{-(2n + d)} (d^3(d+7))^n
    ClosedForm c;
    c.radicand = rational_pow(Rational(quartic(d)), n) / pow2(static_cast<long>(2 * n + d));
    return c;
}

BoundReport bound_report(std::size_t d, unsigned bits) {
    require_dim(d, "bound_report");
    return {d, triangular_size(d), ell_d(d, bits), u_d(d, bits), pd_upper_bound(d, bits), lambda1_upper_bound(d, bits)};
}

}  // namespace perfectforms
