#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tap/laurent.hpp"

using namespace tap;

namespace {

LaurentPoly P(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigRat(c));
    return p;
}

LaurentPoly random_poly(std::mt19937& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg), cc(-coeff_bound, coeff_bound);
    LaurentPoly p;
    int nterms = dd(rng) + 1;
    for (int i = 0; i < nterms; ++i) p.add_term(dd(rng), BigRat(cc(rng)));
    return p;
}

}  // namespace

TEST_CASE("construction invariant: no zero coefficients") {
    LaurentPoly p = P({{0, 1}, {1, -1}});
    p.add_term(1, BigRat(1));
    CHECK(p == LaurentPoly::constant(1));
    p.add_term(0, BigRat(-1));
    CHECK(p.is_zero());
    CHECK(LaurentPoly::from_coeffs({0, 0}).is_zero());
}

TEST_CASE("normalize_unit") {
    CHECK(normalize_unit(P({{2, -1}, {1, 3}, {0, -1}})) == P({{2, 1}, {1, -3}, {0, 1}}));
    CHECK(normalize_unit(P({{-1, 1}, {0, -1}})) == P({{0, 1}, {1, -1}}));
    CHECK(normalize_unit(LaurentPoly()).is_zero());
    // idempotent and unit-invariant
    LaurentPoly p = P({{-3, 2}, {0, -5}, {2, 7}});
    CHECK(normalize_unit(normalize_unit(p)) == normalize_unit(p));
    CHECK(normalize_unit(p.shifted(4).scaled(BigRat(-1))) == normalize_unit(p));
}

TEST_CASE("span_degree") {
    CHECK(span_degree(P({{2, 1}, {1, -3}, {0, 1}})) == 2);
    CHECK(span_degree(LaurentPoly::constant(5)) == 0);
    CHECK(span_degree(P({{-2, 1}, {3, 1}})) == 5);
    CHECK_THROWS(span_degree(LaurentPoly()));
}

TEST_CASE("is_monic") {
    CHECK(is_monic(P({{2, 1}, {1, -3}, {0, 1}})));
    CHECK_FALSE(is_monic(P({{1, 2}, {0, -1}})));
    CHECK(is_monic(P({{3, -1}, {0, 5}})));
    CHECK_THROWS(is_monic(LaurentPoly()));
}

TEST_CASE("content and primitive part") {
    LaurentPoly p = P({{1, 6}, {0, -4}});
    CHECK(content(p) == BigRat(2));
    CHECK(primitive_part(p) == P({{1, 3}, {0, -2}}));
    CHECK(content(LaurentPoly()) == BigRat(0));
    CHECK(primitive_part(LaurentPoly()).is_zero());
    LaurentPoly q = P({{0, 1}});
    q = q.scaled(BigRat(1, 2));
    q.add_term(1, BigRat(1, 3));
    CHECK(content(q) == BigRat(1, 6));
}

TEST_CASE("gcd_laurent examples") {
    CHECK(gcd_laurent(P({{2, 1}, {0, -1}}), P({{3, 1}, {0, -1}})) ==
          normalize_unit(P({{1, 1}, {0, -1}})));
    CHECK(gcd_laurent(P({{1, 2}, {0, 2}}), P({{2, 4}, {0, -4}})) == P({{1, 2}, {0, 2}}));
    LaurentPoly p = P({{2, 1}, {1, 1}});
    CHECK(gcd_laurent(p, LaurentPoly()) == normalize_unit(p));
    CHECK_THROWS(gcd_laurent(LaurentPoly(), LaurentPoly()));
}

TEST_CASE("divide_exact") {
    LaurentPoly num = P({{2, 1}, {0, -1}});
    LaurentPoly den = P({{1, 1}, {0, -1}});
    auto q = divide_exact(num, den);
    REQUIRE(q);
    CHECK(*q == P({{1, 1}, {0, 1}}));
    CHECK_FALSE(divide_exact(P({{1, 1}, {0, 1}}), P({{1, 1}, {0, -1}})));
    CHECK_FALSE(divide_exact(num, LaurentPoly()));
    // laurent units divide everything
    auto u = divide_exact(num, P({{-3, -1}}));
    REQUIRE(u);
    CHECK(*u * P({{-3, -1}}) == num);
}

TEST_CASE("is_unit") {
    CHECK(is_unit(P({{5, 1}})));
    CHECK(is_unit(P({{-2, -1}})));
    CHECK_FALSE(is_unit(P({{0, 2}})));
    CHECK_FALSE(is_unit(P({{1, 1}, {0, 1}})));
    CHECK_FALSE(is_unit(LaurentPoly()));
}

TEST_CASE("involution, substitution, evaluation") {
    LaurentPoly p = P({{2, 1}, {1, -3}, {0, 1}});
    CHECK(p.involution() == P({{-2, 1}, {-1, -3}, {0, 1}}));
    CHECK(p.substituted_power(2) == P({{4, 1}, {2, -3}, {0, 1}}));
    CHECK(p.substituted_power(1) == p);
    CHECK(p.evaluate(BigRat(2)) == BigRat(-1));
}

TEST_CASE("ring fuzz: commutativity, associativity, distributivity") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(rng, 6, 9), b = random_poly(rng, 6, 9),
                    c = random_poly(rng, 6, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("normalize_unit is multiplicative up to normalization") {
    std::mt19937 rng(777);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_poly(rng, 5, 9), q = random_poly(rng, 5, 9);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(normalize_unit(p * q) == normalize_unit(normalize_unit(p) * normalize_unit(q)));
    }
}

TEST_CASE("gcd divides both arguments: 1000 random pairs") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly p = random_poly(rng, 8, 9), q = random_poly(rng, 8, 9);
        if (p.is_zero() && q.is_zero()) continue;
        LaurentPoly g = gcd_laurent(p, q);
        if (!p.is_zero()) CHECK(divide_exact(p, g).has_value());
        if (!q.is_zero()) CHECK(divide_exact(q, g).has_value());
    }
}

TEST_CASE("gcd absorbs common factors") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly f = random_poly(rng, 4, 5), p = random_poly(rng, 3, 5),
                    q = random_poly(rng, 3, 5);
        if (f.is_zero() || p.is_zero() || q.is_zero()) continue;
        LaurentPoly g = gcd_laurent(f * p, f * q);
        CHECK(divide_exact(g, gcd_laurent(f, f)).has_value());
    }
}

TEST_CASE("str rendering") {
    CHECK(P({{2, 1}, {1, -3}, {0, 1}}).str() == "t^2 - 3*t + 1");
    CHECK(LaurentPoly().str() == "0");
    CHECK(P({{-1, 1}}).str() == "t^-1");
}
