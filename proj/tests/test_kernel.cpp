#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wk/curve.hpp"
#include "wk/kernel.hpp"
#include "wk/model.hpp"

#include <random>

using namespace wk;

namespace {

std::mt19937 rng(777);

StepWeights random_model() {
    // Random positive weights on a random support, normalized to sum 1.
    std::uniform_int_distribution<int> pick(0, 1);
    std::uniform_int_distribution<long> wgt(1, 9);
    std::vector<std::pair<Step, long>> raw;
    while (raw.empty()) {
        raw.clear();
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                if (!(i == 0 && j == 0) && pick(rng)) raw.push_back({{i, j}, wgt(rng)});
    }
    long total = 0;
    for (const auto& [s, v] : raw) total += v;
    std::vector<std::pair<Step, Rat>> entries;
    for (const auto& [s, v] : raw) entries.push_back({s, rat(v, total)});
    return StepWeights::weighted(entries);
}

LaurentPoly poly_in_x(const Poly& p) {
    LaurentPoly out;
    for (int k = 0; k <= p.degree(); ++k) out.add_term(k, 0, p.coeff(k));
    return out;
}

LaurentPoly poly_in_y(const Poly& p) {
    LaurentPoly out;
    for (int k = 0; k <= p.degree(); ++k) out.add_term(0, k, p.coeff(k));
    return out;
}

} // namespace

TEST_CASE("kernel coefficient polynomials: frozen simple-walk example") {
    const Kernel k = build_kernel(builtin_model("simple"), rat(1, 2), false);
    // b(x) = (1/8) x^2 - x + 1/8.
    CHECK(k.b.coeff(2) == rat(1, 8));
    CHECK(k.b.coeff(1) == rat(-1));
    CHECK(k.b.coeff(0) == rat(1, 8));
    CHECK(k.a.coeff(1) == rat(1, 8)); // t * d(0,1)
    CHECK(k.a.coeff(0) == 0);
    CHECK(k.a.coeff(2) == 0);
    CHECK_THROWS_AS(build_kernel(builtin_model("simple"), rat(3, 2), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_kernel(builtin_model("simple"), rat(-1, 2), false),
                    std::invalid_argument);
}

TEST_CASE("both quadratic readings reassemble the kernel") {
    for (int trial = 0; trial < 25; ++trial) {
        const StepWeights w = random_model();
        const Rat t = rat(3, 11);
        const Kernel k = build_kernel(w, t, false);
        const LaurentPoly direct = kernel_laurent(w, t);
        const LaurentPoly y = LaurentPoly::monomial(0, 1, rat(1));
        const LaurentPoly x = LaurentPoly::monomial(1, 0, rat(1));
        CHECK(poly_in_x(k.a) * y * y + poly_in_x(k.b) * y + poly_in_x(k.c) == direct);
        CHECK(poly_in_y(k.ah) * x * x + poly_in_y(k.bh) * x + poly_in_y(k.ch) == direct);
        CHECK(k.dx == k.b * k.b - k.a * k.c * Rat(4));
        CHECK(k.dx.degree() <= 4);
        CHECK(k.dy.degree() <= 4);
    }
}

TEST_CASE("bihomogeneous grid agrees with the kernel polynomial") {
    const StepWeights w = builtin_model("simple-ne");
    const Rat t = rat(1, 3);
    const BihomKernel bk(w, t);
    // Affine chart eval equals the Laurent evaluation.
    const LaurentPoly K = kernel_laurent(w, t);
    std::mt19937 local(5);
    std::uniform_int_distribution<long> v(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const Rat xv = rat(v(local), 1 + std::abs(v(local)));
        const Rat yv = rat(v(local), 1 + std::abs(v(local)));
        if (is_zero(xv) || is_zero(yv)) continue;
        CHECK(bk.eval(ProjQ::affine(xv), ProjQ::affine(yv)) == K.eval(xv, yv));
    }
    // t sum d - 1 at x = y = 1.
    CHECK(bk.eval(ProjQ::affine(rat(1)), ProjQ::affine(rat(1))) == t - 1);
    // No constant-corner monomial under diagonal symmetry: the point
    // ([0:1],[1:0]) always lies on the curve.
    CHECK(bk.eval(ProjQ(rat(0), rat(1)), ProjQ::infinity()) == 0);
}

TEST_CASE("fiber slices restrict the grid") {
    const StepWeights w = phi_transform(builtin_model("example-4.7:1/5"));
    const Rat t = rat(1, 3);
    const BihomKernel bk(w, t);
    const auto fiber0 = bk.x_fiber(ProjQ(rat(0), rat(1)));
    CHECK(fiber0[0] == 0);                 // A = t*d_phi(-1,1) = 0
    CHECK(fiber0[1] == t * rat(1, 5));     // B = t*d_phi(-1,0)
    CHECK(fiber0[2] == t * rat(1, 5));     // C = t*d_phi(-1,-1)
    const auto fiberinf = bk.y_fiber(ProjQ::infinity());
    CHECK(fiberinf[0] == t * rat(1, 5));   // t*d_phi(1,1)
    CHECK(fiberinf[1] == t * rat(1, 5));   // t*d_phi(0,1)
    CHECK(fiberinf[2] == 0);
}

TEST_CASE("boundary factor polynomials f and g") {
    SUBCASE("f vanishes without west or southwest steps") {
        const Kernel k = build_kernel(builtin_model("example-4.14"), rat(1, 3), false);
        CHECK(f_poly(k).is_zero());
    }
    SUBCASE("diagonal model keeps only the west weight") {
        const Kernel k = build_kernel(builtin_model("example-4.7:1/5"), rat(1, 3), false);
        const Poly f = f_poly(k);
        CHECK(f.degree() == 0);
        CHECK(f.coeff(0) == rat(1, 3) * rat(1, 5)); // t * mu
    }
    SUBCASE("g at t = 0 is y/2") {
        // g is affine in t, so extrapolating two samples to t = 0 isolates
        // the t-free part.
        const Rat t1 = rat(1, 7), t2 = rat(1, 3);
        const LaurentPoly g1 = g_poly(build_kernel(builtin_model("simple-ne"), t1, false));
        const LaurentPoly g2 = g_poly(build_kernel(builtin_model("simple-ne"), t2, false));
        const LaurentPoly at_zero = (g2 * t1 - g1 * t2) * (Rat(1) / (t1 - t2));
        CHECK(at_zero == LaurentPoly::monomial(0, 1, rat(1, 2)));
    }
    SUBCASE("g equals -x*ah_phi(y) - bh_phi(y)/2 identically") {
        const Kernel k = build_kernel(builtin_model("simple-ne"), rat(1, 7), false);
        const Kernel kphi = build_kernel(builtin_model("simple-ne"), rat(1, 7), true);
        LaurentPoly expect;
        for (int deg = 0; deg <= 2; ++deg) {
            expect.add_term(1, deg, -kphi.ah.coeff(deg));
            expect.add_term(0, deg, -kphi.bh.coeff(deg) / 2);
        }
        CHECK(g_poly(k) == expect);
    }
    SUBCASE("transformed kernels are rejected") {
        const Kernel k = build_kernel(builtin_model("simple-ne"), rat(1, 3), true);
        CHECK_THROWS_AS(f_poly(k), std::invalid_argument);
        CHECK_THROWS_AS(g_poly(k), std::invalid_argument);
    }
}

TEST_CASE("ellipticity gate") {
    CHECK(is_elliptic(builtin_model("simple-ne")));
    CHECK_FALSE(is_elliptic(StepWeights::unweighted({{-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}})));
    CHECK_FALSE(is_elliptic(StepWeights::unweighted({{1, 1}, {-1, -1}})));
    // The transformed support of every catalogue model stays elliptic.
    for (const auto& name : builtin_model_names())
        CHECK(is_elliptic(phi_transform(builtin_model(name))));
}

TEST_CASE("points built on a fiber evaluate to zero") {
    const Kernel k = build_kernel(builtin_model("simple-ne"), rat(1, 10), true);
    const BihomKernel bk(k);
    const auto [p, q] = fiber_points(bk, ProjQ(rat(1), rat(2)));
    CHECK(on_curve(bk, p));
    CHECK(on_curve(bk, q));
    CHECK_FALSE(p == q);
}
