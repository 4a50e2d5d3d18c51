// Release gate: one pass/fail line per criterion.  Run with no arguments for
// the full battery, or pass criterion numbers to run a subset.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ytab/experiment.hpp"
#include "ytab/greene.hpp"
#include "ytab/inverse.hpp"
#include "ytab/jdt.hpp"
#include "ytab/limit_shape.hpp"
#include "ytab/rsk.hpp"
#include "ytab/sampler.hpp"

using namespace ytab;
using nlohmann::json;

namespace {

// Pinned thresholds.
constexpr double kFreqTol = 0.05;           // path class frequencies
constexpr double kRowFreqTol = 0.03;        // mean row frequencies
constexpr double kSupTol = 0.05;            // angle CDF sup distance
constexpr double kNumericTol = 1e-9;        // closed-form identities
constexpr double kDiscreteAccuracy = 0.95;  // inverse round trip, discrete letters
constexpr double kNeutralMae = 0.05;        // inverse round trip, neutral letters
constexpr double kTvTol = 0.03;             // shape distribution TV distance
constexpr double kFirstRowLo = 1.85, kFirstRowHi = 2.15;
constexpr std::uint64_t kSeed = 7;

ThomaParams mixed_params() {
    ThomaParams p;
    p.alpha = {0.3};
    p.beta = {0.2};
    p.gamma = 0.5;
    return p;
}

// Every word of length 1..max_len over the 6-letter pool, without repeated
// neutral values.
void for_each_pool_word(int max_len, const std::function<void(const Word&)>& fn) {
    static const std::vector<Letter> pool = {Letter::Row(1),        Letter::Row(2),
                                             Letter::Col(1),        Letter::Col(2),
                                             Letter::Neutral(0.25), Letter::Neutral(0.75)};
    Word w;
    w.orientation = Orientation::jdt;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> digits(static_cast<size_t>(len), 0);
        for (;;) {
            int n25 = 0, n75 = 0;
            for (int d : digits) {
                if (d == 4) ++n25;
                if (d == 5) ++n75;
            }
            if (n25 <= 1 && n75 <= 1) {
                w.letters.clear();
                for (int d : digits) w.letters.push_back(pool[static_cast<size_t>(d)]);
                fn(w);
            }
            int i = len - 1;
            while (i >= 0 && digits[static_cast<size_t>(i)] == 5)
                digits[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            digits[static_cast<size_t>(i)]++;
        }
    }
}

bool shift_duality_holds(const Word& w) {
    Word tail;
    tail.orientation = w.orientation;
    tail.letters.assign(w.letters.begin() + 1, w.letters.end());
    return jdt_transform(recording_tableau(w)) == recording_tableau(tail);
}

bool insertion_duality_holds(const Word& w) {
    const Box last = lazy_path(recording_tableau(w)).back();
    const StandardTableau mirrored = recording_tableau(w.reversed_phi());
    const int n = static_cast<int>(w.size());
    for (size_t y = 0; y < mirrored.rows.size(); ++y)
        for (size_t x = 0; x < mirrored.rows[y].size(); ++x)
            if (mirrored.rows[y][x] == n)
                return last == Box{static_cast<int>(x) + 1, static_cast<int>(y) + 1};
    return false;
}

// Exhaustive pool corpus plus 10^4 random words of length <= 200 under the
// mixed parameters; returns the failure count.
long check_word_property(const std::function<bool(const Word&)>& holds,
                         std::uint64_t stream_base) {
    long failures = 0;
    for_each_pool_word(8, [&](const Word& w) {
        if (!holds(w)) ++failures;
    });
    const ThomaParams p = mixed_params();
    for (long t = 0; t < 10000; ++t) {
        Rng rng(kSeed, stream_base + static_cast<std::uint64_t>(t));
        const std::size_t len = 1 + rng.next_below(200);
        if (!holds(sample_word(p, len, rng))) ++failures;
    }
    return failures;
}

json run_config(const std::string& config_text, const std::string& out_dir = "") {
    const ExperimentConfig cfg = ExperimentConfig::from_json(config_text);
    const ExperimentReport rep = run_experiment(cfg, out_dir);
    return json::parse(rep.summary_json);
}

bool criterion_shift_duality() {
    return check_word_property(shift_duality_holds, 100000) == 0;
}

bool criterion_insertion_duality() {
    return check_word_property(insertion_duality_holds, 200000) == 0;
}

bool criterion_greene() {
    long failures = 0;
    for_each_pool_word(8, [&](const Word& w) {
        if (!(rsk_shape(w) == greene_oracle(w))) ++failures;
    });
    return failures == 0;
}

bool criterion_standardization() {
    long failures = 0;
    for_each_pool_word(8, [&](const Word& w) {
        Word rows;
        rows.orientation = Orientation::jdt;
        for (int r : standardize(w)) rows.letters.push_back(Letter::Row(r));
        if (!(recording_tableau(w) == recording_tableau(rows))) ++failures;
    });
    return failures == 0;
}

bool criterion_path_frequencies() {
    const json s = run_config(R"({
        "experiment": "paths",
        "thoma": {"alpha": [0.3], "beta": [0.2], "gamma": 0.5},
        "n": 2000, "trials": 2000, "seed": 7,
        "tolerances": {"freq": 0.05}
    })");
    return s.at("passed").get<bool>() && s.at("dead_ends").get<long>() == 0;
}

bool criterion_row_frequencies() {
    const json s = run_config(R"({
        "experiment": "frequencies",
        "thoma": {"alpha": [0.6, 0.3], "beta": [], "gamma": 0.1},
        "n": 5000, "trials": 200, "seed": 7,
        "tolerances": {"mean_freq": 0.03}
    })");
    return s.at("passed").get<bool>();
}

bool criterion_theta_distribution() {
    const json s = run_config(R"({
        "experiment": "theta-dist",
        "thoma": {"alpha": [], "beta": [], "gamma": 1.0},
        "n": 4000, "trials": 1000, "seed": 7,
        "tolerances": {"sup_distance": 0.05}
    })");
    return s.at("passed").get<bool>();
}

bool criterion_limit_shape() {
    bool ok = true;
    const ShapePoint a = curve_point(0.0);
    ok = ok && std::abs(a.x) < kNumericTol && std::abs(a.y - 2.0) < kNumericTol;
    const ShapePoint b = curve_point(1.0);
    ok = ok && std::abs(b.x - 2.0) < kNumericTol && std::abs(b.y) < kNumericTol;
    const ShapePoint c = curve_point(0.5);
    const double two_over_pi = 2.0 / 3.14159265358979323846;
    ok = ok && std::abs(c.x - two_over_pi) < kNumericTol &&
         std::abs(c.y - two_over_pi) < kNumericTol;

    for (int i = 1; i < 20; ++i) {
        const double w = i / 20.0;
        const ShapePoint p = curve_point(1.0 - w);
        ok = ok && std::abs(theta_cdf(std::atan2(p.y, p.x)) - w) < kNumericTol;
    }

    // Plancherel first-row growth
    ThomaParams plancherel;
    plancherel.gamma = 1.0;
    const int trials = 200;
    const std::size_t n = 10000;
    int inside = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(kSeed, 300000 + static_cast<std::uint64_t>(t));
        const Word w = sample_word(plancherel, n, rng);
        RskState st(w.orientation);
        for (const Letter& a : w.letters) st.push(a);
        const double scaled =
            static_cast<double>(st.rows().front().size()) / std::sqrt(static_cast<double>(n));
        if (scaled >= kFirstRowLo && scaled <= kFirstRowHi) ++inside;
    }
    ok = ok && inside >= trials * 9 / 10;
    return ok;
}

bool criterion_inverse_round_trip() {
    const json s = run_config(R"({
        "experiment": "invert",
        "thoma": {"alpha": [0.3], "beta": [0.2], "gamma": 0.5},
        "n": 5000, "trials": 100, "k": 20, "seed": 7,
        "tolerances": {"discrete_accuracy": 0.95, "neutral_mae": 0.05}
    })");
    return s.at("passed").get<bool>() &&
           s.at("discrete_accuracy").get<double>() >= kDiscreteAccuracy &&
           s.at("neutral_mae").get<double>() <= kNeutralMae;
}

bool criterion_measure_preservation() {
    const json s = run_config(R"({
        "experiment": "check", "suite": "measure-preserving", "seed": 7
    })");
    if (!s.at("passed").get<bool>()) return false;
    const double tv = s.at("suites").at("measure-preserving").at("tv_distance").get<double>();
    return tv <= kTvTol;
}

bool criterion_row_pair() {
    const json s = run_config(R"({"experiment": "s2", "trials": 100000, "seed": 7})");
    if (!s.at("passed").get<bool>()) return false;
    ThomaParams half;
    half.alpha = {0.5};
    half.gamma = 0.5;
    return row_pair_probability(half) == 0.625;
}

bool criterion_pitman() {
    for (int dim : {2, 3}) {
        std::ostringstream cfg;
        cfg << R"({"experiment": "pitman", "dimension": )" << dim
            << R"(, "n": 50, "trials": 5000, "seed": 7})";
        const json s = run_config(cfg.str());
        if (!s.at("passed").get<bool>() || s.at("violations").get<long>() != 0) return false;
    }
    return true;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

bool criterion_determinism() {
    const auto base = std::filesystem::temp_directory_path();
    const auto dir_a = base / "ytab_accept_det_a";
    const auto dir_b = base / "ytab_accept_det_b";
    const char* cfg_a = R"({
        "experiment": "paths",
        "thoma": {"alpha": [0.3], "beta": [0.2], "gamma": 0.5},
        "n": 300, "trials": 200, "seed": 5, "workers": 1
    })";
    const char* cfg_b = R"({
        "experiment": "paths",
        "thoma": {"alpha": [0.3], "beta": [0.2], "gamma": 0.5},
        "n": 300, "trials": 200, "seed": 5, "workers": 3
    })";
    run_config(cfg_a, dir_a.string());
    run_config(cfg_b, dir_b.string());
    const bool same = slurp(dir_a / "data.csv") == slurp(dir_b / "data.csv") &&
                      slurp(dir_a / "manifest.json") == slurp(dir_b / "manifest.json");
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    return same;
}

struct Criterion {
    int id;
    const char* what;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "shift duality holds on the exhaustive and random corpora", criterion_shift_duality},
    {2, "final lazy box matches the mirrored recording tableau", criterion_insertion_duality},
    {3, "insertion shape equals the exhaustive decomposition oracle", criterion_greene},
    {4, "standardization preserves the recording tableau", criterion_standardization},
    {5, "path class frequencies match the letter weights, no dead ends",
     criterion_path_frequencies},
    {6, "mean row frequencies match the row weights", criterion_row_frequencies},
    {7, "empirical angle distribution matches the model CDF", criterion_theta_distribution},
    {8, "limit curve values, round trip, and first-row growth", criterion_limit_shape},
    {9, "inverse round trip recovers the leading letters", criterion_inverse_round_trip},
    {10, "shifted prefixes keep the sampling distribution", criterion_measure_preservation},
    {11, "two-letter row probability closed form and simulation", criterion_row_pair},
    {12, "walk transform stays ordered and conserves mass", criterion_pitman},
    {13, "worker count never changes output bytes", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion& c : kCriteria) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
            continue;
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        std::printf("criterion %2d: %s  %s%s\n", c.id, ok ? "PASS" : "FAIL", c.what,
                    note.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
