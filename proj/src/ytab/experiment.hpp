#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ytab/thoma.hpp"

namespace ytab {

// Seeded, reproducible experiment runner.  Every trial draws from its own
// rng stream derived from (seed, trial index), so the output bytes do not
// depend on the worker count.
struct ExperimentConfig {
    std::string experiment;  // paths | theta-dist | frequencies | invert |
                             // limit-shape-grid | pitman | check | s2
    ThomaParams thoma;
    bool thoma_set = false;
    long n = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    int k = 0;          // invert: letters to recover
    int dimension = 0;  // pitman: walk dimension
    long grid_points = 0;
    std::string suite = "all";  // check: which property suite
    std::map<std::string, double> tolerances;

    double tolerance(const std::string& name, double fallback) const {
        auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }

    static ExperimentConfig from_json(const std::string& json_text);
    std::string to_json() const;  // canonical echo (workers excluded)
};

struct ExperimentReport {
    bool passed = false;
    std::string summary_json;
};

// Runs the experiment, writes <out_dir>/data.csv, <out_dir>/summary.json and
// <out_dir>/manifest.json.  Pass out_dir = "" to skip file output.
ExperimentReport run_experiment(const ExperimentConfig& config, const std::string& out_dir);

// Exact and statistical property suites, also reachable through the "check"
// experiment.  scope: all | greene | duality | standardization |
// measure-preserving.
ExperimentReport run_property_suite(const std::string& scope, std::uint64_t seed, int workers);

// FNV-1a over the file bytes, as stored in the manifest.
std::string content_hash_hex(const std::string& bytes);

}  // namespace ytab
