#include "perfectforms/bounds.hpp"
#include "perfectforms/catalog.hpp"
#include "perfectforms/enumeration.hpp"

#include <doctest.h>

#include <cmath>

using namespace perfectforms;

namespace {

const Rational kTolerance(1, mpz_class("10000000000000000000000000"));  // 1e-25

bool close(const BigFloat& a, const BigFloat& b) { return relatively_close(a, b, BigFloat(kTolerance, 200)); }

BigFloat lnv(long num, long den = 1) { return BigFloat(ratio(num, den), 200).log(); }

}  // namespace

TEST_CASE("precision defaults to 200 bits") { CHECK(precision_bits() >= 64); }

TEST_CASE("ball volumes") {
    BigFloat pi = BigFloat::pi(200);
    CHECK(close(ball_volume_log(1), lnv(2)));
    CHECK(close(ball_volume_log(2), pi.log()));
    CHECK(close(ball_volume_log(3), (BigFloat(Rational(4, 3), 200) * pi).log()));
    CHECK_THROWS_AS(ball_volume_log(0), DomainError);
}

TEST_CASE("ell_d") {
    CHECK(ell_d_sqrt2(2) == QSqrt2(0, Rational(1, 4374)));
    CHECK(close(ell_d(2), (BigFloat(2L, 200).sqrt() / BigFloat(4374L, 200)).log()));
    // d = 3: n = 6, d^3(d+7)/8 = 270/8, 2^{(n-d)/2} = 2^{3/2}
    QSqrt2 expected = QSqrt2::pow_sqrt2(3) / QSqrt2(Rational(720) * ratio(270 * 270, 64) * ratio(270 * 270, 64) *
                                                     ratio(270 * 270, 64));
    CHECK(ell_d_sqrt2(3) == expected);
    CHECK_THROWS_AS(ell_d(1), DomainError);
}

TEST_CASE("u_d") {
    BigFloat pi = BigFloat::pi(200);
    CHECK(close(u_d(2), (pi / (BigFloat(6L, 200) * BigFloat(2L, 200).sqrt())).log()));
    CHECK(u_d(3).is_finite());
    for (std::size_t d = 2; d <= 50; ++d) CHECK(trace_section_radius(d) < BigFloat(1L, 200));
}

TEST_CASE("pd bound") {
    BigFloat pi = BigFloat::pi(200);
    BigFloat expected = (pi * BigFloat(ratio(373248, 1024), 200)).log();
    CHECK(close(pd_upper_bound(2), expected));
    CHECK(std::abs(pd_upper_bound(2).exp().to_double() - 1145.11) < 0.01);
    CHECK(pd_upper_bound(8).is_finite());
    CHECK(pd_upper_bound(8) > lnv(10916));

    double prev = 0;
    for (std::size_t d : {10, 100, 1000}) {
        double ratio = pd_upper_bound(d).to_double() / (double(d) * double(d) * std::log(double(d)));
        CHECK(ratio > 0);
        CHECK(ratio < 10);
        if (prev) CHECK(ratio < prev * 2);
        prev = ratio;
    }
}

TEST_CASE("lambda1 bound") {
    CHECK(std::abs(lambda1_upper_bound(2).exp().to_double() - 38.1838) < 1e-3);
    CHECK(lambda1_upper_bound(2) > lnv(2));
    CHECK(lambda1_upper_bound(4) > lnv(2));
    // 2^{-(n + d/2)} (d^3(d+7))^{n/2} == 2^{(n-d)/2} (d^3(d+7)/8)^{n/2}
    for (std::size_t d = 2; d <= 12; ++d) {
        const long n = static_cast<long>(d * (d + 1) / 2);
        const long ld = static_cast<long>(d);
        BigFloat l = BigFloat(ratio(ld * ld * ld * (ld + 7), 8), 200).log();
        BigFloat rhs = BigFloat(n - ld, 200) / BigFloat(2L, 200) * lnv(2) + BigFloat(n, 200) / BigFloat(2L, 200) * l;
        CHECK(close(lambda1_upper_bound(d), rhs));
    }
}

TEST_CASE("dual-path and identity sweeps") {
    for (std::size_t d = 2; d <= 6; ++d) {
        CAPTURE(d);
        CHECK(close(ell_d(d), ell_d_exact(d).log()));
        CHECK(close(u_d(d), u_d_exact(d).log()));
        CHECK(close(pd_upper_bound(d), pd_upper_bound_exact(d).log()));
        CHECK(close(lambda1_upper_bound(d), lambda1_upper_bound_exact(d).log()));
        BigFloat from_sqrt2 = BigFloat(ell_d_sqrt2(d).sqrt2_part(), 200) * BigFloat(2L, 200).sqrt() +
                              BigFloat(ell_d_sqrt2(d).rational_part(), 200);
        CHECK(close(ell_d(d), from_sqrt2.log()));
    }
    BigFloat prev = pd_upper_bound(2);
    for (std::size_t d = 2; d <= 200; ++d) {
        BoundReport r = bound_report(d);
        CHECK(close(r.log_pd_bound, r.log_u - r.log_ell));
        CHECK(r.log_ell <= r.log_u);
        if (d > 2) CHECK(r.log_pd_bound > prev);
        prev = r.log_pd_bound;
    }
}

TEST_CASE("finite over a wide range") {
    for (std::size_t d : {2, 10, 100, 1000, 10000}) {
        BoundReport r = bound_report(d);
        CHECK(r.log_ell.is_finite());
        CHECK(r.log_u.is_finite());
        CHECK(r.log_pd_bound.is_finite());
        CHECK(r.log_lambda1_bound.is_finite());
    }
}

TEST_CASE("simplex volume") {
    for (std::size_t n = 1; n <= 6; ++n) {
        RatMatrix e = RatMatrix::identity(n);
        CHECK(simplex_volume(e) == Rational(1) / Rational(factorial(n)));
        RatMatrix two = e;
        for (std::size_t i = 0; i < n; ++i) two(i, i) = 2;
        CHECK(simplex_volume(two) == Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(n)) / Rational(factorial(n)));
    }
    RatMatrix dep{{1, 2}, {2, 4}};
    CHECK(simplex_volume(dep) == 0);
}

TEST_CASE("simplex volume matches the cone-over-base identity") {
    // Base in the hyperplane x_n = 0, apex at height h.
    RatMatrix p{{2, 1, 0, 0}, {0, 3, 1, 0}, {1, 0, 1, 0}, {5, -2, 7, 4}};
    RatMatrix base{{2, 1, 0}, {0, 3, 1}, {1, 0, 1}};
    Rational h = 4;
    CHECK(simplex_volume(p) == h / 4 * simplex_volume(base));
}

TEST_CASE("lambda1 bound dominates catalog minima") {
    for (const auto& name : catalog::names()) {
        auto e = catalog::get(name);
        BigFloat l1(arithmetical_minimum(e.form).form_min, 200);
        CHECK(l1.log() <= lambda1_upper_bound(e.form.dim()));
    }
}
