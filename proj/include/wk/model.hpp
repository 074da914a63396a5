#pragma once

#include "wk/rat.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace wk {

/// One small step (di, dj), both in {-1, 0, 1}.
struct Step {
    int di;
    int dj;
    friend bool operator==(const Step& a, const Step& b) { return a.di == b.di && a.dj == b.dj; }
};

/// Weighted small-step model: a 3x3 grid of rational weights d(i,j) in [0,1]
/// summing to 1, including the stay weight d(0,0). The support excludes (0,0).
class StepWeights {
public:
    /// All-zero grid; only useful as a slot to assign a real model into.
    StepWeights() { d_.fill(Rat(0)); }

    /// Weighted model from explicit entries; entries must sum to 1.
    static StepWeights weighted(const std::vector<std::pair<Step, Rat>>& entries,
                                std::string name = "");
    /// Uniform model: weight 1/|steps| on each listed step, zero stay weight.
    static StepWeights unweighted(const std::vector<Step>& steps, std::string name = "");

    const Rat& at(int i, int j) const { return d_[index(i, j)]; }
    const std::string& name() const { return name_; }

    /// Nonzero-weight steps, (0,0) excluded, in row-major grid order.
    std::vector<Step> support() const;
    const Rat& stay_weight() const { return at(0, 0); }

    /// Diagonal reflection (i, j) -> (j, i) of the model.
    StepWeights transpose() const;

    friend bool operator==(const StepWeights& a, const StepWeights& b) { return a.d_ == b.d_; }

    nlohmann::json to_json() const;
    static StepWeights from_json(const nlohmann::json& j);

private:
    static size_t index(int i, int j);
    void validate() const;

    std::array<Rat, 9> d_{};
    std::string name_;
};

struct AssumptionReport {
    bool a1 = false;
    bool a2 = false;
    std::string diagnostic;
};

/// Diagonal symmetry d(i,j) = d(j,i) with both anti-diagonal weights zero.
bool check_a1(const StepWeights& w);

/// True when the support spans more than any closed half-plane through the
/// origin: every angular gap between consecutive occupied compass directions
/// is below pi. Throws on an empty support.
bool check_a2(const StepWeights& w);

AssumptionReport check_assumptions(const StepWeights& w);

/// Weight remap induced by the change of coordinates (x, y) -> (xy, 1/x).
/// Requires check_a1; anti-diagonal steps would leave the small-step grid.
StepWeights phi_transform(const StepWeights& w);

/// Named models used throughout: the four uniform infinite-group models with
/// diagonal symmetry, the three weighted study models, and the simple walk as
/// a finite-group control. "example-4.7" takes an optional parameter, e.g.
/// "example-4.7:1/3" sets the diagonal weight.
StepWeights builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

/// Loads a builtin by name, or a model file when the argument names one.
StepWeights resolve_model(const std::string& name_or_path);

} // namespace wk
