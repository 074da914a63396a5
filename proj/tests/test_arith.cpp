#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wk/laurent.hpp"
#include "wk/proj.hpp"
#include "wk/quad.hpp"
#include "wk/series.hpp"

#include <random>

using namespace wk;

namespace {

std::mt19937 rng(20240811);

Rat random_rat(int span = 20) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return rat(num(rng), den(rng));
}

QuadExt random_quad(const mpz_class& d) {
    QuadExt z(random_rat(), random_rat(), d);
    return z;
}

LaurentPoly random_laurent() {
    std::uniform_int_distribution<int> exp(-4, 4);
    std::uniform_int_distribution<int> nterms(0, 6);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) p.add_term(exp(rng), exp(rng), random_rat());
    return p;
}

TruncSeries random_trunc(int order) {
    TruncSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, random_laurent());
    return s;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(rat_str(parse_rat("3/6")) == "1/2");
    CHECK(rat_str(parse_rat("-4/8")) == "-1/2");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(rat_str(rat(2, -4)) == "-1/2"); // sign moves to the numerator
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("square decomposition pulls out square factors") {
    auto d8 = decompose_sqrt(rat(8));
    CHECK(d8.radicand == 2);
    CHECK(d8.scale == 2);
    auto dq = decompose_sqrt(rat(9, 4));
    CHECK(dq.radicand == 1);
    CHECK(dq.scale == rat(3, 2));
    auto dneg = decompose_sqrt(rat(-12));
    CHECK(dneg.radicand == -3);
    CHECK(dneg.scale == 2);
    auto dthird = decompose_sqrt(rat(1, 3)); // 1/3 = (1/3)^2 * 3
    CHECK(dthird.radicand == 3);
    CHECK(dthird.scale == rat(1, 3));
    CHECK(dthird.scale * dthird.scale * Rat(dthird.radicand) == rat(1, 3));
}

TEST_CASE("quadratic solver: rational square discriminant") {
    auto [p, m] = quad_field_solve(rat(1), rat(0), rat(-4));
    CHECK(p == QuadExt(rat(2)));
    CHECK(m == QuadExt(rat(-2)));

    auto [dp, dm] = quad_field_solve(rat(1), rat(-2), rat(1));
    CHECK(dp == QuadExt(rat(1)));
    CHECK(dm == dp); // double root
}

TEST_CASE("quadratic solver: irrational roots stay exact") {
    auto [p, m] = quad_field_solve(rat(1), rat(0), rat(-2));
    CHECK_FALSE(p.is_rational());
    CHECK(p * p == QuadExt(rat(2)));     // square check
    CHECK(p * m == QuadExt(rat(-2)));    // Vieta product = C/A
    CHECK(p + m == QuadExt(rat(0)));     // Vieta sum = -B/A
    CHECK(m == -p);
    CHECK_THROWS_AS(quad_field_solve(rat(0), rat(1), rat(1)), std::domain_error);
}

TEST_CASE("quadratic field axioms on random samples") {
    const mpz_class d(5);
    for (int k = 0; k < 200; ++k) {
        const QuadExt a = random_quad(d);
        const QuadExt b = random_quad(d);
        const QuadExt c = random_quad(d);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == QuadExt(1));
            CHECK(a * a.conj() == QuadExt(a.norm()));
        }
    }
    CHECK_THROWS_AS(QuadExt(rat(0)).inverse(), std::domain_error);
    // Elements of distinct extensions never combine.
    CHECK_THROWS_AS(QuadExt(rat(1), rat(1), mpz_class(2)) + QuadExt(rat(1), rat(1), mpz_class(3)),
                    std::domain_error);
}

TEST_CASE("projective canonicalization is idempotent and scale invariant") {
    for (int k = 0; k < 200; ++k) {
        Rat a = random_rat();
        Rat b = random_rat();
        if (is_zero(a) && is_zero(b)) a = 1;
        Rat lam = random_rat();
        if (is_zero(lam)) lam = rat(7, 3);
        const ProjQ p(a, b);
        CHECK(ProjQ(p.c0(), p.c1()) == p);          // idempotent
        CHECK(ProjQ(lam * a, lam * b) == p);        // scale invariant
    }
    CHECK(ProjQ(rat(3), rat(0)) == ProjQ::infinity());
    CHECK(ProjQ(rat(0), rat(5)) == ProjQ(rat(0), rat(1)));
    CHECK_THROWS_AS(ProjQ(rat(0), rat(0)), std::invalid_argument);

    // Same over a quadratic extension.
    const QuadExt z(rat(1), rat(2), mpz_class(3));
    const ProjQuad q(z, QuadExt(rat(2)));
    CHECK(ProjQuad(z * z, QuadExt(rat(2)) * z) == q);
}

TEST_CASE("laurent arithmetic basics") {
    const LaurentPoly x = LaurentPoly::monomial(1, 0, rat(1));
    const LaurentPoly y = LaurentPoly::monomial(0, 1, rat(1));
    const LaurentPoly p = x * y + LaurentPoly::constant(rat(3));
    CHECK(p.coeff(1, 1) == 1);
    CHECK(p.coeff(0, 0) == 3);
    CHECK((p - p).is_zero());
    CHECK(p.swap_xy() == p);
    const LaurentPoly q = LaurentPoly::monomial(-2, 1, rat(5, 3));
    CHECK(q.eval(rat(2), rat(3)) == rat(5, 3) * rat(1, 4) * 3);
}

TEST_CASE("series product: frozen examples") {
    const int order = 5;
    // (1 + t x)(1 - t x) = 1 - t^2 x^2.
    TruncSeries a(order), b(order);
    a.set_coeff(0, LaurentPoly::constant(rat(1)));
    a.set_coeff(1, LaurentPoly::monomial(1, 0, rat(1)));
    b.set_coeff(0, LaurentPoly::constant(rat(1)));
    b.set_coeff(1, LaurentPoly::monomial(1, 0, rat(-1)));
    const TruncSeries prod = series_mul(a, b);
    CHECK(prod.coeff(0) == LaurentPoly::constant(rat(1)));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == LaurentPoly::monomial(2, 0, rat(-1)));
    for (int n = 3; n <= order; ++n) CHECK(prod.coeff(n).is_zero());

    // Zero absorbs.
    CHECK(series_mul(a, TruncSeries(order)).is_zero());

    // (sum t^n x^n)^2 has coefficient 5 x^4 at t^4.
    TruncSeries geo(order);
    for (int n = 0; n <= order; ++n) geo.set_coeff(n, LaurentPoly::monomial(n, 0, rat(1)));
    const TruncSeries sq = series_mul(geo, geo);
    CHECK(sq.coeff(4) == LaurentPoly::monomial(4, 0, rat(5)));
}

TEST_CASE("series ring laws hold exactly up to the truncation order") {
    const int order = 6;
    for (int k = 0; k < 40; ++k) {
        const TruncSeries a = random_trunc(order);
        const TruncSeries b = random_trunc(order);
        const TruncSeries c = random_trunc(order);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
        CHECK(series_mul(a, b) == series_mul_reference(a, b));
    }
    CHECK_THROWS_AS(TruncSeries(3) + TruncSeries(4), std::invalid_argument);
}

TEST_CASE("series first_term reports the lowest monomial") {
    TruncSeries s(4);
    s.set_coeff(3, LaurentPoly::monomial(-1, 2, rat(7, 2)));
    const auto term = s.first_term();
    REQUIRE(term.has_value());
    const auto& [n, i, j, c] = *term;
    CHECK(n == 3);
    CHECK(i == -1);
    CHECK(j == 2);
    CHECK(c == rat(7, 2));
    CHECK_FALSE(TruncSeries(2).first_term().has_value());
}
