#pragma once

#include "wk/model.hpp"
#include "wk/series.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace wk {

/// Is (i, j) inside the three-quarter plane i >= 0 or j >= 0?
inline bool in_region(int i, int j) { return i >= 0 || j >= 0; }

/// Exact weighted counts of three-quarter-plane walks: layer n maps reached
/// positions to the total weight of all n-step walks ending there. Walks that
/// would enter the forbidden quadrant are dropped, and the stay weight d(0,0)
/// acts as a legal step.
class WalkTable {
public:
    using Layer = std::unordered_map<std::int64_t, Rat>;

    static std::int64_t key(int i, int j) {
        return (static_cast<std::int64_t>(i) << 32) ^ (static_cast<std::int64_t>(j) & 0xffffffff);
    }
    static std::pair<int, int> unkey(std::int64_t k) {
        return {static_cast<int>(k >> 32), static_cast<int>(static_cast<std::int32_t>(k))};
    }

    WalkTable(StepWeights w, int order) : weights_(std::move(w)), layers_(order + 1) {}

    int order() const { return static_cast<int>(layers_.size()) - 1; }
    const StepWeights& weights() const { return weights_; }
    const Layer& layer(int n) const { return layers_[static_cast<size_t>(n)]; }
    Layer& layer(int n) { return layers_[static_cast<size_t>(n)]; }

    Rat count(int n, int i, int j) const;
    /// Total weight of layer n (at most 1; the defect is boundary loss).
    Rat mass(int n) const;

    /// Sorted (n, i, j, weight) rows, the CSV export order.
    std::vector<std::tuple<int, int, int, Rat>> rows() const;

private:
    StepWeights weights_;
    std::vector<Layer> layers_;
};

/// Forward dynamic program over the step weights; layers are computed in
/// sequence, cells of a layer in parallel.
WalkTable enumerate(const StepWeights& w, int order);

/// Serial twin of enumerate, kept as the comparison baseline.
WalkTable enumerate_reference(const StepWeights& w, int order);

/// The sectional series of the region split: full series, lower cone, the
/// diagonal, upper cone, the boundary series on both half-axes, the origin
/// series, and the quadrant-coordinates views of D and L.
enum class Section {
    C,         // everything
    L,         // i >= 0, j <= i-1
    D,         // diagonal i = j >= 0
    U,         // j >= 0, i <= j-1
    C0minus,   // sum c(0,-j) y^-j, j > 0
    Cminus0,   // sum c(-i,0) x^-i, i > 0
    C00,       // origin returns
    Dphi,      // diagonal read in quadrant coordinates: y^i
    Lphi,      // lower cone read in quadrant coordinates: x^(i-j') ...
    C0minus_x, // sum c(0,-j) x^j, j > 0
};

Section parse_section(const std::string& name);

TruncSeries section(const WalkTable& table, Section which);

} // namespace wk
