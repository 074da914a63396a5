#include "wk/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace wk {

Rat WalkTable::count(int n, int i, int j) const {
    const auto& l = layer(n);
    auto it = l.find(key(i, j));
    return it == l.end() ? Rat(0) : it->second;
}

Rat WalkTable::mass(int n) const {
    Rat total(0);
    for (const auto& [k, v] : layer(n)) total += v;
    return total;
}

std::vector<std::tuple<int, int, int, Rat>> WalkTable::rows() const {
    std::vector<std::tuple<int, int, int, Rat>> out;
    for (int n = 0; n <= order(); ++n) {
        for (const auto& [k, v] : layer(n)) {
            const auto [i, j] = unkey(k);
            out.emplace_back(n, i, j, v);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
              });
    return out;
}

namespace {

struct WeightedStep {
    int di, dj;
    Rat w;
};

std::vector<WeightedStep> legal_moves(const StepWeights& w) {
    std::vector<WeightedStep> out;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            if (!is_zero(w.at(i, j))) out.push_back({i, j, w.at(i, j)});
    return out;
}

// Targets reachable from the previous layer, deduplicated and sorted so the
// parallel fill is deterministic.
std::vector<std::int64_t> candidate_targets(const WalkTable::Layer& prev,
                                            const std::vector<WeightedStep>& moves) {
    std::vector<std::int64_t> keys;
    keys.reserve(prev.size() * moves.size());
    for (const auto& [k, v] : prev) {
        const auto [i, j] = WalkTable::unkey(k);
        for (const auto& m : moves) {
            const int ti = i + m.di;
            const int tj = j + m.dj;
            if (in_region(ti, tj)) keys.push_back(WalkTable::key(ti, tj));
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

Rat cell_value(const WalkTable::Layer& prev, const std::vector<WeightedStep>& moves, int ti,
               int tj) {
    Rat acc(0);
    for (const auto& m : moves) {
        const int si = ti - m.di;
        const int sj = tj - m.dj;
        if (!in_region(si, sj)) continue;
        auto it = prev.find(WalkTable::key(si, sj));
        if (it != prev.end()) acc += m.w * it->second;
    }
    return acc;
}

template <bool Parallel>
WalkTable run_dp(const StepWeights& w, int order) {
    if (order < 0) throw std::invalid_argument("negative walk order");
    WalkTable table(w, order);
    table.layer(0).emplace(WalkTable::key(0, 0), Rat(1));
    const auto moves = legal_moves(w);

    for (int n = 0; n < order; ++n) {
        const auto& prev = table.layer(n);
        const auto targets = candidate_targets(prev, moves);
        std::vector<Rat> values(targets.size());
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(targets.size());
                 ++idx) {
                const auto [ti, tj] = WalkTable::unkey(targets[static_cast<size_t>(idx)]);
                values[static_cast<size_t>(idx)] = cell_value(prev, moves, ti, tj);
            }
        } else {
            for (size_t idx = 0; idx < targets.size(); ++idx) {
                const auto [ti, tj] = WalkTable::unkey(targets[idx]);
                values[idx] = cell_value(prev, moves, ti, tj);
            }
        }
        auto& next = table.layer(n + 1);
        next.reserve(targets.size());
        for (size_t idx = 0; idx < targets.size(); ++idx)
            if (!is_zero(values[idx])) next.emplace(targets[idx], std::move(values[idx]));
    }
    return table;
}

} // namespace

WalkTable enumerate(const StepWeights& w, int order) { return run_dp<true>(w, order); }

WalkTable enumerate_reference(const StepWeights& w, int order) { return run_dp<false>(w, order); }

Section parse_section(const std::string& name) {
    if (name == "C") return Section::C;
    if (name == "L") return Section::L;
    if (name == "D") return Section::D;
    if (name == "U") return Section::U;
    if (name == "C0minus") return Section::C0minus;
    if (name == "Cminus0") return Section::Cminus0;
    if (name == "C00") return Section::C00;
    if (name == "Dphi") return Section::Dphi;
    if (name == "Lphi") return Section::Lphi;
    if (name == "C0minus_x") return Section::C0minus_x;
    throw std::invalid_argument("unknown section: " + name);
}

TruncSeries section(const WalkTable& table, Section which) {
    TruncSeries out(table.order());
    for (int n = 0; n <= table.order(); ++n) {
        LaurentPoly p;
        for (const auto& [k, v] : table.layer(n)) {
            const auto [i, j] = WalkTable::unkey(k);
            switch (which) {
            case Section::C: p.add_term(i, j, v); break;
            case Section::L:
                if (i >= 0 && j <= i - 1) p.add_term(i, j, v);
                break;
            case Section::D:
                if (i == j) p.add_term(i, j, v);
                break;
            case Section::U:
                if (j >= 0 && i <= j - 1) p.add_term(i, j, v);
                break;
            case Section::C0minus:
                if (i == 0 && j < 0) p.add_term(0, j, v);
                break;
            case Section::Cminus0:
                if (j == 0 && i < 0) p.add_term(i, 0, v);
                break;
            case Section::C00:
                if (i == 0 && j == 0) p.add_term(0, 0, v);
                break;
            case Section::Dphi:
                if (i == j) p.add_term(0, i, v);
                break;
            case Section::Lphi:
                // (i, j) with j <= i-1 lands on x^(i-j) y^i in the quadrant.
                if (i >= 0 && j <= i - 1) p.add_term(i - j, i, v);
                break;
            case Section::C0minus_x:
                if (i == 0 && j < 0) p.add_term(-j, 0, v);
                break;
            }
        }
        out.set_coeff(n, std::move(p));
    }
    return out;
}

} // namespace wk
