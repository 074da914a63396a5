#include "wk/classify.hpp"
#include "wk/curve.hpp"
#include "wk/kernel.hpp"
#include "wk/model.hpp"
#include "wk/verify.hpp"
#include "wk/walks.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace wk;

void apply_thread_cap() {
    if (const char* env = std::getenv("WALK_KERNEL_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write: " + path);
    return file;
}

std::vector<Rat> parse_samples(const std::string& csv) {
    std::vector<Rat> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw std::invalid_argument("empty t-sample list");
    return out;
}

int cmd_models_list() {
    for (const auto& name : builtin_model_names()) {
        const StepWeights w = builtin_model(name);
        std::cout << name << ":";
        for (const Step& s : w.support())
            std::cout << " (" << s.di << "," << s.dj << ")=" << rat_str(w.at(s.di, s.dj));
        std::cout << "\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& model, int order, const std::string& csv_path,
                  const std::string& section_name, const std::string& json_path) {
    const StepWeights w = resolve_model(model);
    const WalkTable table = enumerate(w, order);
    std::ofstream file;
    std::ostream& out = open_or_stdout(file, csv_path);
    for (const auto& [n, i, j, v] : table.rows())
        out << n << "," << i << "," << j << "," << rat_str(v) << "\n";
    if (!section_name.empty()) {
        const TruncSeries s = section(table, parse_section(section_name));
        std::ofstream jfile;
        std::ostream& jout = open_or_stdout(jfile, json_path);
        jout << series_to_json(s).dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& model, const Rat& t, int order) {
    const StepWeights w = resolve_model(model);
    const VerifyOutcome outcome = verify_model(w, t, order);
    if (outcome.all_zero) {
        std::cout << "all residuals zero up to order " << order << "\n";
        return 0;
    }
    std::cout << outcome.first_failure << "\n";
    return 1;
}

int cmd_orbit(const std::string& model, const Rat& t, const std::string& from, int steps,
              const std::string& json_path) {
    const StepWeights w = resolve_model(model);
    const Kernel k = build_kernel(w, t, /*transformed=*/true);
    const BihomKernel bk(k);
    const PoleData poles = poles_of_y(k);
    CurvePointQ p = poles.p1;
    if (from == "P2") {
        if (!poles.p2) throw std::invalid_argument("double pole case: P2 does not exist");
        p = *poles.p2;
    } else if (from != "P1") {
        throw std::invalid_argument("--from must be P1 or P2");
    }

    nlohmann::json arr = nlohmann::json::array();
    auto emit = [&](int step, const char* map, const CurvePointQ& q) {
        arr.push_back({{"step", step},
                       {"map", map},
                       {"x", nlohmann::json::array({rat_str(q.x.c0()), rat_str(q.x.c1())})},
                       {"y", nlohmann::json::array({rat_str(q.y.c0()), rat_str(q.y.c1())})}});
    };
    emit(0, "start", p);
    for (int s = 1; s <= steps; ++s) {
        p = (s % 2 == 1) ? iota1(bk, p) : iota2(bk, p);
        emit(s, s % 2 == 1 ? "iota1" : "iota2", p);
    }
    std::ofstream file;
    std::ostream& out = open_or_stdout(file, json_path);
    out << arr.dump(2) << "\n";
    return 0;
}

int cmd_probe_group(const std::string& model, const Rat& t, long n_max, int seed) {
    const StepWeights w = resolve_model(model);
    const Kernel k = build_kernel(w, t, /*transformed=*/true);
    const auto order = group_order_probe(k, n_max, seed);
    if (order)
        std::cout << "sigma closes at order " << *order << "\n";
    else
        std::cout << "no closure up to " << n_max << "\n";
    return 0;
}

int cmd_classify(const std::string& model, const std::string& samples_csv, long k_max,
                 long n_max, const std::string& json_path) {
    const StepWeights w = resolve_model(model);
    ClassifyOptions opts;
    if (!samples_csv.empty()) opts.t_samples = parse_samples(samples_csv);
    opts.k_max = k_max;
    opts.n_max = n_max;
    const ClassificationReport r = classify(w, opts);
    std::ofstream file;
    std::ostream& out = open_or_stdout(file, json_path);
    out << report_to_json(r).dump(2) << "\n";
    return 0;
}

int cmd_reproduce(const std::string& target) {
    if (target != "thm4.15") throw std::invalid_argument("unknown reproduction target: " + target);
    const auto rows = reproduce_thm415();
    std::cout << thm415_table(rows);
    if (thm415_matches(rows)) {
        std::cout << "verdict table matches: 1 D-algebraic (k = 2), 3 D-transcendental\n";
        return 0;
    }
    std::cout << "verdict table MISMATCH\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"exact kernel-curve analysis of three-quarter-plane walk models"};
    app.require_subcommand(1);

    auto* models = app.add_subcommand("models", "model catalogue");
    models->require_subcommand(1);
    models->add_subcommand("list", "list builtin models and their weights");

    std::string model;
    int order = 8;
    std::string csv_path, json_path, section_name;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "exact walk counts up to n steps");
    enumerate_cmd->add_option("--model", model, "builtin name or model file")->required();
    enumerate_cmd->add_option("--n", order, "number of steps")->required();
    enumerate_cmd->add_option("--csv", csv_path, "write rows n,i,j,weight to a file");
    enumerate_cmd->add_option("--series", section_name, "also emit a sectional series as JSON");
    enumerate_cmd->add_option("--json", json_path, "series output file (with --series)");

    std::string t_str = "1/2";
    auto* verify_cmd = app.add_subcommand("verify", "check the functional equations exactly");
    verify_cmd->add_option("--model", model, "builtin name or model file")->required();
    verify_cmd->add_option("--t", t_str, "rational t in (0,1)")->required();
    verify_cmd->add_option("--order", order, "truncation order")->required();

    std::string from = "P1";
    int steps = 8;
    auto* orbit_cmd = app.add_subcommand("orbit", "iota1/iota2 orbit from a pole of y");
    orbit_cmd->add_option("--model", model, "builtin name or model file")->required();
    orbit_cmd->add_option("--t", t_str, "rational t in (0,1)")->required();
    orbit_cmd->add_option("--from", from, "P1 or P2");
    orbit_cmd->add_option("--steps", steps, "number of alternating switches");
    orbit_cmd->add_option("--json", json_path, "output file (default stdout)");

    long n_max = 200;
    int seed = 0;
    auto* probe_cmd = app.add_subcommand("probe-group", "search for sigma-closure");
    probe_cmd->add_option("--model", model, "builtin name or model file")->required();
    probe_cmd->add_option("--t", t_str, "rational t in (0,1)")->required();
    probe_cmd->add_option("--max", n_max, "largest order tried");
    probe_cmd->add_option("--seed", seed, "generic point selector");

    std::string samples_csv;
    long k_max = 25;
    auto* classify_cmd = app.add_subcommand("classify", "differential nature of the series");
    classify_cmd->add_option("--model", model, "builtin name or model file")->required();
    classify_cmd->add_option("--t-samples", samples_csv, "comma-separated rationals in (0,1)");
    classify_cmd->add_option("--k-max", k_max, "orbit relation search bound");
    classify_cmd->add_option("--n-max", n_max, "group closure search bound");
    classify_cmd->add_option("--json", json_path, "report file (default stdout)");

    std::string target;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "re-run a published verdict table");
    reproduce_cmd->add_option("target", target, "thm4.15")->required();

    try {
        app.parse(argc, argv);
        if (models->parsed()) return cmd_models_list();
        if (enumerate_cmd->parsed())
            return cmd_enumerate(model, order, csv_path, section_name, json_path);
        if (verify_cmd->parsed()) return cmd_verify(model, parse_rat(t_str), order);
        if (orbit_cmd->parsed())
            return cmd_orbit(model, parse_rat(t_str), from, steps, json_path);
        if (probe_cmd->parsed()) return cmd_probe_group(model, parse_rat(t_str), n_max, seed);
        if (classify_cmd->parsed())
            return cmd_classify(model, samples_csv, k_max, n_max, json_path);
        if (reproduce_cmd->parsed()) return cmd_reproduce(target);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
