#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wk/verify.hpp"

using namespace wk;

namespace {

// The checks are linear in the count table, so a single bumped entry is the
// standard self-diagnostic: it must surface at its own t-order.
WalkTable corrupted_table(const StepWeights& w, int order) {
    WalkTable table = enumerate(w, order);
    table.layer(3).begin()->second += 1;
    return table;
}

} // namespace

TEST_CASE("all residuals vanish on the catalogue") {
    for (const auto& name : builtin_model_names()) {
        const StepWeights w = builtin_model(name);
        for (const Rat& t : {rat(1, 3), rat(1, 2)}) {
            CAPTURE(name);
            const WalkTable table = enumerate(w, 8);
            CHECK(check_plane_equation(table, t).is_zero());
            if (check_a1(w)) {
                CHECK(check_sym_equation(table, t).is_zero());
                CHECK(check_octant_equation(table, t).is_zero());
            }
        }
    }
}

TEST_CASE("plane equation holds for asymmetric models too") {
    const StepWeights w = StepWeights::weighted(
        {{{0, 1}, rat(2, 5)}, {{1, 0}, rat(1, 5)}, {{-1, 0}, rat(1, 5)}, {{0, -1}, rat(1, 5)}});
    CHECK(check_plane_equation(w, rat(1, 2), 7).is_zero());
    CHECK_THROWS_AS(check_sym_equation(w, rat(1, 2), 7), std::domain_error);
    CHECK_THROWS_AS(check_octant_equation(w, rat(1, 2), 7), std::domain_error);
}

TEST_CASE("corrupting one count surfaces at its own order") {
    const StepWeights w = builtin_model("simple-ne");
    const WalkTable bad = corrupted_table(w, 8);
    for (const TruncSeries& res : {check_plane_equation(bad, rat(1, 2)),
                                   check_sym_equation(bad, rat(1, 2)),
                                   check_octant_equation(bad, rat(1, 2))}) {
        CHECK_FALSE(res.is_zero());
        const auto term = res.first_term();
        REQUIRE(term.has_value());
        CHECK(std::get<0>(*term) == 3);
    }
}

TEST_CASE("the quadrant residual is the transported symmetric residual") {
    // Identically true, so it is checked where it has content: on a corrupted
    // table both residuals are nonzero and still match monomial for monomial.
    const StepWeights w = builtin_model("sw-corner");
    const Rat t = rat(1, 2);
    const WalkTable bad = corrupted_table(w, 8);
    const TruncSeries sym = check_sym_equation(bad, t);
    const TruncSeries oct = check_octant_equation(bad, t);
    CHECK_FALSE(sym.is_zero());
    TruncSeries transported(8);
    for (int n = 0; n <= 8; ++n)
        transported.set_coeff(n, quadrant_coordinates(sym.coeff(n)).mul_monomial(1, 0, rat(1)));
    CHECK(transported == oct);

    // And on a clean table both vanish.
    const WalkTable good = enumerate(w, 8);
    CHECK(check_sym_equation(good, t).is_zero());
    CHECK(check_octant_equation(good, t).is_zero());
}

TEST_CASE("verify_model aggregates and localizes failures") {
    const VerifyOutcome ok = verify_model(builtin_model("sw-corner"), rat(1, 2), 8);
    CHECK(ok.all_zero);
    CHECK(ok.first_failure.empty());

    const VerifyOutcome plain =
        verify_model(StepWeights::weighted({{{0, 1}, rat(1, 2)}, {{1, 0}, rat(1, 2)}}),
                     rat(1, 2), 6);
    CHECK(plain.all_zero); // plane equation only, still clean
}

TEST_CASE("quadrant coordinate substitution on monomials") {
    LaurentPoly p = LaurentPoly::monomial(3, 1, rat(1)); // x^3 y -> x^2 y^3
    CHECK(quadrant_coordinates(p) == LaurentPoly::monomial(2, 3, rat(1)));
    LaurentPoly q = LaurentPoly::monomial(2, 2, rat(5)); // diagonal -> pure y
    CHECK(quadrant_coordinates(q) == LaurentPoly::monomial(0, 2, rat(5)));
}
