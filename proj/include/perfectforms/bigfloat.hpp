#pragma once

// Minimal RAII wrapper over MPFR with an explicit per-value precision, so
// that high-precision evaluation never touches global state.

#include "perfectforms/exact.hpp"

#include <mpfr.h>

#include <string>

namespace perfectforms {

/// Working precision in bits: PERFECTFORMS_PRECISION_BITS, default 200.
unsigned precision_bits();

class BigFloat {
public:
    explicit BigFloat(unsigned bits = precision_bits());
    BigFloat(long value, unsigned bits);
    BigFloat(const Integer& value, unsigned bits);
    BigFloat(const Rational& value, unsigned bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(unsigned bits);

    [[nodiscard]] unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    [[nodiscard]] bool is_finite() const { return mpfr_number_p(v_) != 0; }
    /// Scientific notation with the given number of significant digits.
    [[nodiscard]] std::string to_string(int digits = 30) const;

    [[nodiscard]] BigFloat log() const;
    [[nodiscard]] BigFloat exp() const;
    [[nodiscard]] BigFloat sqrt() const;
    [[nodiscard]] BigFloat abs() const;
    /// ln Gamma(x) for x > 0.
    [[nodiscard]] BigFloat lgamma() const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    [[nodiscard]] mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

/// |a - b| <= rel * max(|a|, |b|)
bool relatively_close(const BigFloat& a, const BigFloat& b, const BigFloat& rel);

}  // namespace perfectforms
