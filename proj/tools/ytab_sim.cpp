// Command line driver for the simulator.  Talks to the library purely
// through the C API; flags are folded into a config JSON, and --config
// overrides anything given on the command line.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ytab.h"

namespace {

using nlohmann::json;

struct Options {
    std::vector<double> alpha;
    std::vector<double> beta;
    double gamma = -1.0;
    long n = 0;
    long trials = 0;
    unsigned long long seed = 0;
    int workers = 1;
    int k = 0;
    int dimension = 0;
    long grid_points = 0;
    std::string suite = "all";
    std::string out_dir;
    std::string config_file;
};

json build_config(const std::string& experiment, const Options& opt) {
    json cfg;
    cfg["experiment"] = experiment;
    if (!opt.alpha.empty() || !opt.beta.empty() || opt.gamma >= 0.0) {
        json thoma;
        thoma["alpha"] = opt.alpha;
        thoma["beta"] = opt.beta;
        thoma["gamma"] = opt.gamma >= 0.0 ? opt.gamma : 0.0;
        cfg["thoma"] = thoma;
    }
    if (opt.n > 0) cfg["n"] = opt.n;
    if (opt.trials > 0) cfg["trials"] = opt.trials;
    cfg["seed"] = opt.seed;
    cfg["workers"] = opt.workers;
    if (opt.k > 0) cfg["k"] = opt.k;
    if (opt.dimension > 0) cfg["dimension"] = opt.dimension;
    if (opt.grid_points > 0) cfg["grid_points"] = opt.grid_points;
    cfg["suite"] = opt.suite;

    if (!opt.config_file.empty()) {
        std::ifstream f(opt.config_file);
        if (!f) throw CLI::ValidationError("--config", "cannot open " + opt.config_file);
        std::stringstream buf;
        buf << f.rdbuf();
        json overrides = json::parse(buf.str());
        for (const auto& [key, value] : overrides.items()) cfg[key] = value;
    }
    return cfg;
}

int run(const std::string& experiment, const Options& opt) {
    const json cfg = build_config(experiment, opt);
    char* summary = nullptr;
    int passed = 0;
    const ytab_status st = ytab_run_experiment(
        cfg.dump().c_str(), opt.out_dir.empty() ? nullptr : opt.out_dir.c_str(), &summary,
        &passed);
    if (st != YTAB_OK) {
        std::fprintf(stderr, "error (%s): %s\n", ytab_status_name(st), ytab_last_error());
        return 2;
    }
    std::printf("%s\n", json::parse(summary).dump(2).c_str());
    ytab_string_free(summary);
    return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for generalized RSK and jeu de taquin on infinite Young tableaux"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", opt.alpha, "row letter weights a1,a2,...")->delimiter(',');
        sub->add_option("--beta", opt.beta, "column letter weights b1,b2,...")->delimiter(',');
        sub->add_option("--gamma", opt.gamma, "neutral mass");
        sub->add_option("--n", opt.n, "prefix length");
        sub->add_option("--trials", opt.trials, "Monte Carlo trials");
        sub->add_option("--seed", opt.seed, "rng seed");
        sub->add_option("--workers", opt.workers, "worker threads");
        sub->add_option("--out", opt.out_dir, "output directory for CSV/JSON artifacts");
        sub->add_option("--config", opt.config_file, "config JSON file (overrides flags)");
        return sub;
    };

    add_common(app.add_subcommand("paths", "path classification frequencies"));
    add_common(app.add_subcommand("theta-dist", "asymptotic angle distribution"));
    add_common(app.add_subcommand("frequencies", "row/column frequency means"));
    auto* invert = add_common(app.add_subcommand("invert", "inverse RSK round trip"));
    invert->add_option("--k", opt.k, "letters to recover");
    auto* grid = add_common(app.add_subcommand("limit-shape-grid", "limit curve evaluation"));
    grid->add_option("--grid-points", opt.grid_points, "grid resolution");
    auto* pitman = add_common(app.add_subcommand("pitman", "lattice walk transform"));
    pitman->add_option("--dimension", opt.dimension, "walk dimension");
    auto* check = add_common(app.add_subcommand("check", "property suites"));
    check->add_option("--suite", opt.suite,
                      "all | greene | duality | standardization | measure-preserving");
    add_common(app.add_subcommand("s2", "two-letter row probability check"));

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
