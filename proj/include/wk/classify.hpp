#pragma once

#include "wk/curve.hpp"
#include "wk/model.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wk {

enum class Verdict {
    Rational,            // support inside a closed half-plane: plane-type series
    NotCovered,          // diagonal symmetry fails
    FiniteGroupDetected, // sigma closes at every sample
    DAlgebraic,          // uniform even orbit relation between the y-poles
    DTranscendental,     // double pole, or uniform absence of even relations
    Inconclusive,        // mixed evidence within the given bounds
};

std::string verdict_str(Verdict v);

struct SampleEvidence {
    Rat t;
    std::optional<long> group_closure; // least sigma-order found, if any
    std::optional<long> orbit_k;       // sigma^(2k)(P1) = P2
    std::optional<long> odd_offset;    // odd s with sigma^s(P1) = P2
    std::vector<CurvePointQ> certificate; // sigma-steps P2 -> P1 when orbit_k is set
};

struct ClassificationReport {
    std::string model;
    AssumptionReport assumptions;
    std::optional<Rat> d_phi_01;
    std::optional<PoleData> poles;
    std::vector<SampleEvidence> samples;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<long> k; // DAlgebraic certificate exponent
    std::string reason;
    std::string theorem;
    long k_max = 0;
    long n_max = 0;
};

struct ClassifyOptions {
    std::vector<Rat> t_samples{rat(1, 7), rat(1, 3), rat(9, 10)};
    long k_max = 25;
    long n_max = 200;
};

/// Decision procedure over the sampled t values. Every failure mode is a
/// verdict; samples are processed concurrently and reported in input order.
ClassificationReport classify(const StepWeights& w, const ClassifyOptions& opts = {});

nlohmann::json report_to_json(const ClassificationReport& r);

/// The four diagonally symmetric uniform models with infinite group, in their
/// catalogue order; exactly one is D-algebraic with certificate k = 2.
std::vector<ClassificationReport> reproduce_thm415(const ClassifyOptions& opts = {});
bool thm415_matches(const std::vector<ClassificationReport>& rows);
std::string thm415_table(const std::vector<ClassificationReport>& rows);

} // namespace wk
