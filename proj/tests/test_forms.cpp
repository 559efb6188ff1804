#include "oracles.hpp"

#include "perfectforms/forms.hpp"

#include <doctest.h>

using namespace perfectforms;

namespace {

QuadForm a2() { return QuadForm(IntMatrix{{2, 1}, {1, 2}}); }

RatMatrix random_symmetric(oracle::Rng& rng, std::size_t d) {
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            m(i, j) = m(j, i) = ratio(oracle::uniform(rng, -9, 9), oracle::uniform(rng, 1, 6));
    return m;
}

IntVector random_vector(oracle::Rng& rng, std::size_t d, long e) {
    IntVector x(d);
    for (auto& c : x) c = oracle::uniform(rng, -e, e);
    return x;
}

}  // namespace

TEST_CASE("evaluate") {
    CHECK(evaluate(a2(), int_vector({1, -1})) == 2);
    CHECK(evaluate(QuadForm::identity(2), int_vector({0, 0})) == 0);
    CHECK(evaluate(a2(), int_vector({1, 1})) == 6);
    CHECK_THROWS_AS(evaluate(a2(), int_vector({1, 1, 1})), DimensionError);
}

TEST_CASE("trace inner product") {
    CHECK(trace_inner(QuadForm::identity(2), a2()) == a2().trace());
    CHECK(trace_inner(a2(), a2()) == 10);
    CHECK(trace_inner(QuadForm(IntMatrix{{1, 0}, {0, 0}}), a2()) == 2);
}

TEST_CASE("phi and phi'") {
    VectorizedForm v = phi(a2());
    REQUIRE(v.n() == 3);
    CHECK(v.coords[0] == QSqrt2(2));
    CHECK(v.coords[1] == QSqrt2::sqrt2());
    CHECK(v.coords[2] == QSqrt2(2));
    VectorizedForm e = phi(QuadForm::identity(2));
    CHECK(e.coords[0] == QSqrt2(1));
    CHECK(e.coords[1] == QSqrt2(0));
    CHECK(e.coords[2] == QSqrt2(1));
    CHECK(e.inner(v) == QSqrt2(4));

    CHECK(phi_prime(a2()) == int_vector({2, 2, 2}));
    CHECK(phi_prime(QuadForm::identity(2)) == int_vector({1, 0, 1}));
    CHECK(phi_prime(QuadForm::outer(int_vector({1, -1}))) == int_vector({1, -2, 1}));
    CHECK(phi_prime_outer(int_vector({1, -1})) == int_vector({1, -2, 1}));
    CHECK_THROWS_AS(phi_prime(QuadForm::identity(2).scaled(Rational(1, 2))), DomainError);
}

TEST_CASE("index order is row-major over i <= j") {
    auto pairs = upper_index_pairs(3);
    std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    CHECK(pairs == expected);
}

TEST_CASE("apply_unimodular") {
    CHECK(apply_unimodular(a2(), UnimodularMatrix::identity(2)) == a2());
    UnimodularMatrix u(IntMatrix{{1, 1}, {0, 1}});
    CHECK(apply_unimodular(QuadForm::identity(2), u) == QuadForm(IntMatrix{{1, 1}, {1, 2}}));
    CHECK_THROWS_AS(UnimodularMatrix(IntMatrix{{2, 0}, {0, 1}}), DomainError);
}

TEST_CASE("dual") {
    CHECK(dual(QuadForm::identity(3)) == QuadForm::identity(3));
    RatMatrix expected{{Rational(2, 3), Rational(-1, 3)}, {Rational(-1, 3), Rational(2, 3)}};
    CHECK(dual(a2()) == QuadForm(expected));
    CHECK(dual(QuadForm::diagonal({Rational(2), Rational(1, 2)})) == QuadForm::diagonal({Rational(1, 2), Rational(2)}));
    CHECK_THROWS_AS(dual(QuadForm(IntMatrix{{1, 2}, {2, 1}})), DomainError);
}

TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite(QuadForm::identity(4)));
    CHECK_FALSE(is_positive_definite(QuadForm(IntMatrix{{1, 2}, {2, 1}})));
    CHECK(is_positive_definite(a2()));
    CHECK_FALSE(is_positive_definite(QuadForm(IntMatrix{{1, 0}, {0, 0}})));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(QuadForm(IntMatrix{{1, 2}, {3, 1}}), DomainError);
    CHECK_THROWS_AS(QuadForm(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("primitive_integral") {
    QuadForm q(RatMatrix{{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
    CHECK(primitive_integral(q) == a2());
    CHECK(primitive_integral(a2().scaled(6)) == a2());
}

TEST_CASE("property: phi is an isometry and inverts") {
    oracle::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        std::size_t d = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
        QuadForm p(random_symmetric(rng, d));
        QuadForm q(random_symmetric(rng, d));
        VectorizedForm vp = phi(p), vq = phi(q);
        REQUIRE(vp.n() == triangular_size(d));
        CHECK(vp.inner(vq) == QSqrt2(trace_inner(p, q)));
        CHECK(phi_inverse(vp) == p);
    }
}

TEST_CASE("property: outer products, action, duality, sign") {
    oracle::Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        std::size_t d = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
        QuadForm q = oracle::random_pd_form(rng, d, 3);
        IntVector x = random_vector(rng, d, 6);
        CHECK(trace_inner(q, QuadForm::outer(x)) == evaluate(q, x));
        CHECK(evaluate(q, x) == oracle::value(q, x));
        CHECK(evaluate(q, x) == evaluate(q, oracle::negate(x)));

        UnimodularMatrix u(oracle::random_unimodular(rng, d, 8, 3));
        CHECK(evaluate(apply_unimodular(q, u), x) == evaluate(q, u.apply(x)));
        CHECK(dual(dual(q)) == q);
        CHECK(q.det() == oracle::cofactor_det(oracle::rows_of(q)));
    }
}
