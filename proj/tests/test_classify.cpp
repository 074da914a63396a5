#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wk/classify.hpp"
#include "wk/kernel.hpp"

#include <nlohmann/json.hpp>

using namespace wk;

namespace {

ClassifyOptions small_opts(long k_max = 25, long n_max = 200) {
    ClassifyOptions o;
    o.k_max = k_max;
    o.n_max = n_max;
    return o;
}

} // namespace

TEST_CASE("catalogue verdicts") {
    SUBCASE("simple-ne is D-algebraic with k = 2") {
        const auto r = classify(builtin_model("simple-ne"));
        CHECK(r.verdict == Verdict::DAlgebraic);
        REQUIRE(r.k.has_value());
        CHECK(*r.k == 2);
        CHECK(r.theorem == "Thm 4.6");
        for (const auto& s : r.samples) {
            CHECK_FALSE(s.group_closure.has_value());
            CHECK(s.orbit_k == 2);
            REQUIRE(s.certificate.size() == 5);
            // Replay: consecutive certificate points are sigma-related and
            // connect P2 back to P1.
            const Kernel kk = build_kernel(builtin_model("simple-ne"), s.t, true);
            const BihomKernel bk(kk);
            const PoleData poles = poles_of_y(kk);
            CHECK(s.certificate.front() == *poles.p2);
            CHECK(s.certificate.back() == poles.p1);
            for (size_t i = 0; i + 1 < s.certificate.size(); ++i)
                CHECK(sigma(bk, s.certificate[i + 1]) == s.certificate[i]);
        }
    }
    SUBCASE("the three transcendental catalogue models") {
        for (const char* name : {"ne-kite", "sw-corner", "simple-sw"}) {
            const auto r = classify(builtin_model(name));
            CAPTURE(name);
            CHECK(r.verdict == Verdict::DTranscendental);
        }
    }
    SUBCASE("double-pole branch") {
        const auto r = classify(builtin_model("example-4.10"));
        CHECK(r.verdict == Verdict::DTranscendental);
        CHECK(r.theorem == "Thm 4.9");
        REQUIRE(r.d_phi_01.has_value());
        CHECK(is_zero(*r.d_phi_01));
        REQUIRE(r.poles.has_value());
        CHECK(r.poles->pole_case == PoleData::Case::Double);
    }
    SUBCASE("odd-offset obstruction") {
        const auto r = classify(builtin_model("example-4.14"));
        CHECK(r.verdict == Verdict::DTranscendental);
        CHECK(r.theorem == "Prop 4.13");
        for (const auto& s : r.samples) {
            CHECK_FALSE(s.orbit_k.has_value());
            CHECK(s.odd_offset == 3);
        }
    }
    SUBCASE("finite-group control") {
        const auto r = classify(builtin_model("simple"));
        CHECK(r.verdict == Verdict::FiniteGroupDetected);
        for (const auto& s : r.samples) CHECK(s.group_closure == 4);
    }
    SUBCASE("half-plane models are rational") {
        const auto r =
            classify(StepWeights::unweighted({{-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}}));
        CHECK(r.verdict == Verdict::Rational);
        CHECK(classify(StepWeights::unweighted({{0, 1}, {0, -1}})).verdict == Verdict::Rational);
    }
    SUBCASE("asymmetric models are not covered") {
        const StepWeights w = StepWeights::weighted({{{0, 1}, rat(2, 5)},
                                                     {{1, 0}, rat(1, 5)},
                                                     {{-1, 0}, rat(1, 5)},
                                                     {{0, -1}, rat(1, 5)}});
        CHECK(classify(w).verdict == Verdict::NotCovered);
    }
}

TEST_CASE("verdicts are stable under sample choice and bound growth") {
    ClassifyOptions alt;
    alt.t_samples = {rat(2, 11), rat(5, 8)};
    CHECK(classify(builtin_model("simple-ne"), alt).verdict == Verdict::DAlgebraic);
    CHECK(classify(builtin_model("ne-kite"), alt).verdict == Verdict::DTranscendental);

    const auto small = classify(builtin_model("simple-ne"), small_opts(5, 60));
    const auto large = classify(builtin_model("simple-ne"), small_opts(40, 300));
    CHECK(small.verdict == Verdict::DAlgebraic);
    CHECK(large.verdict == Verdict::DAlgebraic);
    CHECK(small.k == large.k);

    CHECK(classify(builtin_model("ne-kite"), small_opts(10, 120)).verdict ==
          Verdict::DTranscendental);
}

TEST_CASE("verdicts are invariant under diagonal reflection") {
    for (const char* name : {"simple-ne", "example-4.10", "example-4.14", "simple"}) {
        const auto a = classify(builtin_model(name));
        const auto b = classify(builtin_model(name).transpose());
        CHECK(a.verdict == b.verdict);
        CHECK(a.k == b.k);
    }
    // Reflection also preserves the rational and not-covered buckets.
    const StepWeights half = StepWeights::unweighted({{-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}});
    CHECK(classify(half).verdict == classify(half.transpose()).verdict);
}

TEST_CASE("report json shape") {
    const auto r = classify(builtin_model("simple-ne"));
    const nlohmann::json j = report_to_json(r);
    CHECK(j.at("model") == "simple-ne");
    CHECK(j.at("assumptions").at("a1") == true);
    CHECK(j.at("assumptions").at("a2") == true);
    CHECK(j.at("d_phi_01") == "1/5");
    CHECK(j.at("poles").at("case") == "simple");
    CHECK(j.at("poles").at("p1").at("x")[0] == "0");
    CHECK(j.at("poles").at("p2").at("x")[0] == "-1");
    CHECK(j.at("verdict") == "DAlgebraic");
    CHECK(j.at("k") == 2);
    CHECK(j.at("theorem") == "Thm 4.6");
    CHECK(j.at("bounds").at("k_max") == 25);
    CHECK(j.at("bounds").at("n_max") == 200);
    REQUIRE(j.at("samples").size() == 3);
    CHECK(j.at("samples")[0].at("t") == "1/7");
    CHECK(j.at("samples")[0].at("orbit_k") == 2);
    CHECK(j.at("samples")[0].at("group_closure").is_null());

    const auto rn = classify(builtin_model("example-4.10"));
    const nlohmann::json jn = report_to_json(rn);
    CHECK(jn.at("poles").at("p2").is_null());
    CHECK(jn.at("d_phi_01") == "0");
}

TEST_CASE("published verdict table reproduces") {
    const auto rows = reproduce_thm415();
    REQUIRE(rows.size() == 4);
    CHECK(thm415_matches(rows));
    int algebraic = 0, transcendental = 0;
    for (const auto& r : rows) {
        if (r.verdict == Verdict::DAlgebraic) ++algebraic;
        if (r.verdict == Verdict::DTranscendental) ++transcendental;
    }
    CHECK(algebraic == 1);
    CHECK(transcendental == 3);
    const std::string table = thm415_table(rows);
    CHECK(table.find("simple-ne: DAlgebraic (k = 2)") != std::string::npos);

    // A different sample set yields the identical table.
    ClassifyOptions alt;
    alt.t_samples = {rat(2, 11), rat(5, 8)};
    const auto rows_alt = reproduce_thm415(alt);
    CHECK(thm415_matches(rows_alt));
}

TEST_CASE("option validation") {
    ClassifyOptions bad;
    bad.t_samples = {};
    CHECK_THROWS_AS(classify(builtin_model("simple"), bad), std::invalid_argument);
    bad.t_samples = {rat(3, 2)};
    CHECK_THROWS_AS(classify(builtin_model("simple"), bad), std::invalid_argument);
}
