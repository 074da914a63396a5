#include "wk/model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wk {

size_t StepWeights::index(int i, int j) {
    if (i < -1 || i > 1 || j < -1 || j > 1) throw std::out_of_range("step outside {-1,0,1}^2");
    return static_cast<size_t>((i + 1) * 3 + (j + 1));
}

void StepWeights::validate() const {
    Rat total(0);
    for (const auto& v : d_) {
        if (sgn(v) < 0 || v > 1) throw std::invalid_argument("step weight outside [0,1]");
        total += v;
    }
    if (total != 1) throw std::invalid_argument("step weights must sum to 1, got " + rat_str(total));
}

StepWeights StepWeights::weighted(const std::vector<std::pair<Step, Rat>>& entries,
                                  std::string name) {
    StepWeights w;
    w.name_ = std::move(name);
    for (auto& v : w.d_) v = Rat(0);
    for (const auto& [s, v] : entries) w.d_[index(s.di, s.dj)] += v;
    w.validate();
    return w;
}

StepWeights StepWeights::unweighted(const std::vector<Step>& steps, std::string name) {
    if (steps.empty()) throw std::invalid_argument("unweighted model with no steps");
    std::vector<std::pair<Step, Rat>> entries;
    const Rat u = rat(1, static_cast<long>(steps.size()));
    for (const Step& s : steps) {
        if (s.di == 0 && s.dj == 0) throw std::invalid_argument("(0,0) is not a step");
        entries.emplace_back(s, u);
    }
    return weighted(entries, std::move(name));
}

std::vector<Step> StepWeights::support() const {
    std::vector<Step> out;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            if (!(i == 0 && j == 0) && !is_zero(at(i, j))) out.push_back({i, j});
    return out;
}

StepWeights StepWeights::transpose() const {
    StepWeights w;
    w.name_ = name_.empty() ? "" : name_ + "-transposed";
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) w.d_[index(i, j)] = at(j, i);
    return w;
}

nlohmann::json StepWeights::to_json() const {
    nlohmann::json d = nlohmann::json::object();
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            if (!is_zero(at(i, j)))
                d[std::to_string(i) + "," + std::to_string(j)] = rat_str(at(i, j));
    nlohmann::json out{{"d", std::move(d)}};
    if (!name_.empty()) out["name"] = name_;
    return out;
}

StepWeights StepWeights::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.at("d").is_object())
        throw std::invalid_argument("model json must be an object with a \"d\" map");
    std::vector<std::pair<Step, Rat>> entries;
    for (const auto& [key, val] : j.at("d").items()) {
        std::istringstream in(key);
        int i = 0, jj = 0;
        char comma = 0;
        if (!(in >> i >> comma >> jj) || comma != ',' || !in.eof())
            throw std::invalid_argument("bad step key \"" + key + "\", expected \"i,j\"");
        entries.emplace_back(Step{i, jj}, parse_rat(val.get<std::string>()));
    }
    return weighted(entries, j.value("name", std::string{}));
}

bool check_a1(const StepWeights& w) {
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            if (w.at(i, j) != w.at(j, i)) return false;
    return is_zero(w.at(1, -1)) && is_zero(w.at(-1, 1));
}

bool check_a2(const StepWeights& w) {
    // Compass slots in counterclockwise order, 45 degrees apart.
    static constexpr Step kCompass[8] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                         {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    std::vector<int> occupied;
    for (int k = 0; k < 8; ++k)
        if (!is_zero(w.at(kCompass[k].di, kCompass[k].dj))) occupied.push_back(k);
    if (occupied.empty()) throw std::domain_error("model has no steps");
    // A gap of four slots (pi) or more means a closed half-plane through the
    // origin contains the whole support.
    for (size_t m = 0; m < occupied.size(); ++m) {
        const int cur = occupied[m];
        const int next = m + 1 < occupied.size() ? occupied[m + 1] : occupied[0] + 8;
        if (next - cur >= 4) return false;
    }
    return true;
}

AssumptionReport check_assumptions(const StepWeights& w) {
    AssumptionReport r;
    r.a1 = check_a1(w);
    r.a2 = check_a2(w);
    std::ostringstream diag;
    diag << (r.a1 ? "diagonally symmetric, no anti-diagonal steps"
                  : "diagonal symmetry fails or anti-diagonal step present");
    diag << "; ";
    diag << (r.a2 ? "support spans every half-plane" : "support lies in a closed half-plane");
    r.diagnostic = diag.str();
    return r;
}

StepWeights phi_transform(const StepWeights& w) {
    if (!check_a1(w))
        throw std::domain_error("anti-diagonal step would create a large step under phi");
    std::vector<std::pair<Step, Rat>> entries{
        {{0, 1}, w.at(1, 1)},  {{1, 1}, w.at(1, 0)},   {{-1, 0}, w.at(0, 1)},
        {{0, 0}, w.at(0, 0)},  {{1, 0}, w.at(0, -1)},  {{-1, -1}, w.at(-1, 0)},
        {{0, -1}, w.at(-1, -1)},
    };
    const std::string name = w.name().empty() ? "" : w.name() + "-phi";
    return StepWeights::weighted(entries, name);
}

namespace {

constexpr Step N{0, 1}, S{0, -1}, E{1, 0}, W{-1, 0}, NE{1, 1}, SW{-1, -1};

StepWeights example_47(const Rat& lambda) {
    if (sgn(lambda) <= 0 || lambda >= 1)
        throw std::invalid_argument("example-4.7 parameter must lie in (0,1)");
    const Rat mu = (Rat(1) - lambda) / 4;
    return StepWeights::weighted(
        {{N, mu}, {S, mu}, {E, mu}, {W, mu}, {NE, lambda}},
        "example-4.7:" + rat_str(lambda));
}

} // namespace

StepWeights builtin_model(const std::string& name) {
    if (name == "simple-ne") return StepWeights::unweighted({N, S, E, W, NE}, name);
    if (name == "sw-corner") return StepWeights::unweighted({W, NE, S, SW}, name);
    if (name == "simple-sw") return StepWeights::unweighted({N, S, E, W, SW}, name);
    if (name == "ne-kite") return StepWeights::unweighted({N, NE, E, SW}, name);
    if (name == "simple") return StepWeights::unweighted({N, S, E, W}, name);
    if (name == "example-4.7") return example_47(rat(1, 5));
    if (name.rfind("example-4.7:", 0) == 0) return example_47(parse_rat(name.substr(12)));
    if (name == "example-4.10")
        return StepWeights::weighted(
            {{N, rat(1, 6)}, {S, rat(1, 6)}, {E, rat(1, 6)}, {W, rat(1, 6)}, {SW, rat(1, 3)}},
            name);
    if (name == "example-4.14")
        return StepWeights::weighted(
            {{E, rat(1, 5)}, {N, rat(1, 5)}, {NE, rat(1, 5)}, {SW, rat(2, 5)}}, name);
    throw std::invalid_argument("unknown model: " + name);
}

std::vector<std::string> builtin_model_names() {
    return {"simple-ne",   "sw-corner",    "simple-sw",    "ne-kite",
            "example-4.7", "example-4.10", "example-4.14", "simple"};
}

StepWeights resolve_model(const std::string& name_or_path) {
    if (std::filesystem::exists(name_or_path)) {
        std::ifstream in(name_or_path);
        if (!in) throw std::runtime_error("cannot read model file: " + name_or_path);
        nlohmann::json j;
        in >> j;
        return StepWeights::from_json(j);
    }
    return builtin_model(name_or_path);
}

} // namespace wk
