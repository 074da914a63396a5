#include "wk/classify.hpp"

#include "wk/kernel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wk {

std::string verdict_str(Verdict v) {
    switch (v) {
    case Verdict::Rational: return "Rational";
    case Verdict::NotCovered: return "NotCovered";
    case Verdict::FiniteGroupDetected: return "FiniteGroupDetected";
    case Verdict::DAlgebraic: return "DAlgebraic";
    case Verdict::DTranscendental: return "DTranscendental";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

SampleEvidence gather_sample(const StepWeights& w, const Rat& t, long k_max, long n_max) {
    SampleEvidence ev;
    ev.t = t;
    const Kernel k = build_kernel(w, t, /*transformed=*/true);
    ev.group_closure = group_order_probe(k, n_max);

    const PoleData poles = poles_of_y(k);
    if (poles.p2) {
        const BihomKernel bk(k);
        const auto offsets = sigma_offsets(bk, *poles.p2, poles.p1, 2 * k_max + 1);
        if (offsets.even && std::abs(*offsets.even) <= 2 * k_max) {
            ev.orbit_k = *offsets.even / 2;
            // Replayable certificate: the sigma-steps leading from P2 back
            // to P1 (inverse steps when the relation points forward).
            CurvePointQ p = *poles.p2;
            ev.certificate.push_back(p);
            const long steps = std::abs(*offsets.even);
            for (long s = 0; s < steps; ++s) {
                p = *offsets.even > 0 ? sigma_inv(bk, p) : sigma(bk, p);
                ev.certificate.push_back(p);
            }
        }
        ev.odd_offset = offsets.odd;
    }
    return ev;
}

template <class T>
bool uniform(const std::vector<SampleEvidence>& samples, T SampleEvidence::*field) {
    for (size_t i = 1; i < samples.size(); ++i)
        if (samples[i].*field != samples[0].*field) return false;
    return true;
}

} // namespace

ClassificationReport classify(const StepWeights& w, const ClassifyOptions& opts) {
    if (opts.t_samples.empty()) throw std::invalid_argument("need at least one t sample");
    for (const Rat& t : opts.t_samples)
        if (sgn(t) <= 0 || t >= 1) throw std::invalid_argument("t samples must lie in (0,1)");

    ClassificationReport r;
    r.model = w.name().empty() ? "custom" : w.name();
    r.k_max = opts.k_max;
    r.n_max = opts.n_max;

    if (w.support().empty()) {
        r.verdict = Verdict::NotCovered;
        r.reason = "model has no steps";
        return r;
    }
    r.assumptions = check_assumptions(w);

    if (!r.assumptions.a2) {
        // A closed half-plane contains every step: the walk is equivalent to
        // an unconstrained or one-sided one, with a rational series.
        r.verdict = Verdict::Rational;
        r.reason = "support lies in a closed half-plane through the origin";
        r.theorem = "plane-type model";
        return r;
    }
    if (!r.assumptions.a1) {
        r.verdict = Verdict::NotCovered;
        r.reason = "diagonal symmetry fails or an anti-diagonal step is present";
        return r;
    }

    const StepWeights wphi = phi_transform(w);
    r.d_phi_01 = wphi.at(0, 1);
    r.poles = poles_of_y(build_kernel(w, opts.t_samples.front(), true));

    r.samples.resize(opts.t_samples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(opts.t_samples.size()); ++i)
        r.samples[static_cast<size_t>(i)] =
            gather_sample(w, opts.t_samples[static_cast<size_t>(i)], opts.k_max, opts.n_max);

    const bool any_closure = std::any_of(r.samples.begin(), r.samples.end(),
                                         [](const SampleEvidence& s) { return s.group_closure.has_value(); });
    const bool all_closure = std::all_of(r.samples.begin(), r.samples.end(),
                                         [](const SampleEvidence& s) { return s.group_closure.has_value(); });

    if (all_closure && uniform(r.samples, &SampleEvidence::group_closure)) {
        r.verdict = Verdict::FiniteGroupDetected;
        r.reason = "sigma closes at order " + std::to_string(*r.samples[0].group_closure) +
                   " at every sample";
        r.theorem = "finite group; outside the transcendence criteria";
        return r;
    }
    if (any_closure) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "sigma-closure found at some samples only";
        return r;
    }

    if (is_zero(*r.d_phi_01)) {
        r.verdict = Verdict::DTranscendental;
        r.reason = "y has a double pole on the kernel curve (d_phi[0,1] = 0); "
                   "no sigma-closure up to n_max at any sample";
        r.theorem = "Thm 4.9";
        return r;
    }

    const bool all_related = std::all_of(r.samples.begin(), r.samples.end(),
                                         [](const SampleEvidence& s) { return s.orbit_k.has_value(); });
    const bool none_related = std::none_of(r.samples.begin(), r.samples.end(),
                                           [](const SampleEvidence& s) { return s.orbit_k.has_value(); });

    if (all_related && uniform(r.samples, &SampleEvidence::orbit_k)) {
        r.verdict = Verdict::DAlgebraic;
        r.k = *r.samples[0].orbit_k;
        r.reason = "sigma^(2k)(P1) = P2 with k = " + std::to_string(*r.k) + " at every sample";
        r.theorem = "Thm 4.6";
        return r;
    }
    if (none_related) {
        r.verdict = Verdict::DTranscendental;
        std::ostringstream reason;
        reason << "no even sigma-offset between the y-poles within |k| <= " << opts.k_max
               << "; conditional on infinite sigma-order (no closure up to n_max)";
        const bool odd_everywhere = std::all_of(
            r.samples.begin(), r.samples.end(),
            [](const SampleEvidence& s) { return s.odd_offset.has_value(); });
        if (odd_everywhere && uniform(r.samples, &SampleEvidence::odd_offset))
            reason << "; poles sit at odd sigma-offset " << *r.samples[0].odd_offset
                   << ", which excludes any even relation";
        r.reason = reason.str();
        r.theorem = "Prop 4.13";
        return r;
    }
    r.verdict = Verdict::Inconclusive;
    r.reason = "orbit relation found at some samples only; enlarge k_max or n_max";
    return r;
}

namespace {

nlohmann::json proj_json(const ProjQ& p) {
    return nlohmann::json::array({rat_str(p.c0()), rat_str(p.c1())});
}

nlohmann::json point_json(const CurvePointQ& p) {
    return {{"x", proj_json(p.x)}, {"y", proj_json(p.y)}};
}

} // namespace

nlohmann::json report_to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["model"] = r.model;
    j["assumptions"] = {{"a1", r.assumptions.a1}, {"a2", r.assumptions.a2}};
    j["d_phi_01"] = r.d_phi_01 ? nlohmann::json(rat_str(*r.d_phi_01)) : nlohmann::json();
    if (r.poles) {
        nlohmann::json poles;
        poles["case"] = r.poles->pole_case == PoleData::Case::Simple ? "simple" : "double";
        poles["p1"] = point_json(r.poles->p1);
        poles["p2"] = r.poles->p2 ? point_json(*r.poles->p2) : nlohmann::json();
        j["poles"] = std::move(poles);
    } else {
        j["poles"] = nullptr;
    }
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples) {
        nlohmann::json e;
        e["t"] = rat_str(s.t);
        e["group_closure"] = s.group_closure ? nlohmann::json(*s.group_closure) : nlohmann::json();
        e["orbit_k"] = s.orbit_k ? nlohmann::json(*s.orbit_k) : nlohmann::json();
        e["odd_offset"] = s.odd_offset ? nlohmann::json(*s.odd_offset) : nlohmann::json();
        if (!s.certificate.empty()) {
            nlohmann::json chain = nlohmann::json::array();
            for (const auto& p : s.certificate) chain.push_back(point_json(p));
            e["certificate"] = std::move(chain);
        }
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    j["verdict"] = verdict_str(r.verdict);
    if (r.k) j["k"] = *r.k;
    j["reason"] = r.reason;
    j["theorem"] = r.theorem;
    j["bounds"] = {{"k_max", r.k_max}, {"n_max", r.n_max}};
    return j;
}

std::vector<ClassificationReport> reproduce_thm415(const ClassifyOptions& opts) {
    std::vector<ClassificationReport> rows;
    for (const char* name : {"ne-kite", "sw-corner", "simple-sw", "simple-ne"})
        rows.push_back(classify(builtin_model(name), opts));
    return rows;
}

bool thm415_matches(const std::vector<ClassificationReport>& rows) {
    if (rows.size() != 4) return false;
    for (const auto& r : rows) {
        if (r.model == "simple-ne") {
            if (r.verdict != Verdict::DAlgebraic || !r.k || *r.k != 2) return false;
        } else if (r.verdict != Verdict::DTranscendental) {
            return false;
        }
    }
    return true;
}

std::string thm415_table(const std::vector<ClassificationReport>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << r.model << ": " << verdict_str(r.verdict);
        if (r.k) out << " (k = " << *r.k << ")";
        out << " [" << r.theorem << "]\n";
    }
    return out.str();
}

} // namespace wk
