#include "perfectforms/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace perfectforms {

unsigned precision_bits() {
    static const unsigned bits = [] {
        const char* env = std::getenv("PERFECTFORMS_PRECISION_BITS");
        if (env == nullptr || *env == '\0') return 200U;
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v < 64 || v > 1U << 20)
            throw std::invalid_argument("PERFECTFORMS_PRECISION_BITS must be an integer in [64, 2^20]");
        return static_cast<unsigned>(v);
    }();
    return bits;
}

BigFloat::BigFloat(unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, unsigned bits) : BigFloat(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Integer& value, unsigned bits) : BigFloat(bits) {
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, unsigned bits) : BigFloat(bits) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::pi(unsigned bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

#define PERFECTFORMS_UNARY(name, fn)            \
    BigFloat BigFloat::name() const {           \
        BigFloat r(bits());                     \
        fn(r.v_, v_, MPFR_RNDN);                \
        return r;                               \
    }

PERFECTFORMS_UNARY(log, mpfr_log)
PERFECTFORMS_UNARY(exp, mpfr_exp)
PERFECTFORMS_UNARY(sqrt, mpfr_sqrt)
PERFECTFORMS_UNARY(abs, mpfr_abs)
PERFECTFORMS_UNARY(operator-, mpfr_neg)
#undef PERFECTFORMS_UNARY

BigFloat BigFloat::lgamma() const {
    if (mpfr_sgn(v_) <= 0) throw DomainError("lgamma: argument must be positive");
    BigFloat r(bits());
    mpfr_lngamma(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
void widen(mpfr_t v, mpfr_srcptr o) {
    if (mpfr_get_prec(o) > mpfr_get_prec(v)) mpfr_prec_round(v, mpfr_get_prec(o), MPFR_RNDN);
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) { widen(v_, o.v_); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { widen(v_, o.v_); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { widen(v_, o.v_); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { widen(v_, o.v_); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

bool relatively_close(const BigFloat& a, const BigFloat& b, const BigFloat& rel) {
    BigFloat scale = a.abs() < b.abs() ? b.abs() : a.abs();
    return (a - b).abs() <= rel * scale;
}

}  // namespace perfectforms
