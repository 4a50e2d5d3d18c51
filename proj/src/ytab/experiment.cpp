#include "ytab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ytab/greene.hpp"
#include "ytab/inverse.hpp"
#include "ytab/jdt.hpp"
#include "ytab/limit_shape.hpp"
#include "ytab/pitman.hpp"
#include "ytab/rsk.hpp"
#include "ytab/sampler.hpp"

namespace ytab {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Runs fn(trial) for every trial index, spreading work over `workers`
// threads.  Results land in a vector indexed by trial, so merge order is
// fixed no matter how trials are scheduled.
template <typename R>
std::vector<R> run_trials(long trials, int workers, const std::function<R(long)>& fn) {
    std::vector<R> results(static_cast<size_t>(trials));
    if (workers <= 1) {
        for (long t = 0; t < trials; ++t) results[static_cast<size_t>(t)] = fn(t);
        return results;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (int wkr = 0; wkr < workers; ++wkr)
        pool.emplace_back([&] {
            for (;;) {
                const long t = next.fetch_add(1);
                if (t >= trials) return;
                results[static_cast<size_t>(t)] = fn(t);
            }
        });
    for (auto& th : pool) th.join();
    return results;
}

ThomaParams default_thoma() {
    ThomaParams p;
    p.alpha = {0.3};
    p.beta = {0.2};
    p.gamma = 0.5;
    return p;
}

struct RunResult {
    std::string csv;
    json summary;
    bool passed = false;
};

// ---------------------------------------------------------------- paths ----

RunResult run_paths(const ExperimentConfig& cfg) {
    const ThomaParams p = cfg.thoma_set ? cfg.thoma : default_thoma();
    const long n = cfg.n > 0 ? cfg.n : 2000;
    const long trials = cfg.trials > 0 ? cfg.trials : 2000;
    const double tol = cfg.tolerance("freq", 0.05);

    struct Row {
        std::string cls;
        int index = 0;
        double value = 0.0;
        bool dead_end = false;
    };
    auto trial_fn = std::function<Row(long)>([&](long t) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const StandardTableau q = sample_vk_prefix(p, static_cast<std::size_t>(n), rng);
        const JdtPath jp = jdt_path(q);
        const PsiValue psi = classify_path(lazy_path(q));
        Row r;
        r.dead_end = jp.complete;
        switch (psi.kind) {
        case PsiValue::Kind::row: r.cls = "row"; r.index = psi.index; break;
        case PsiValue::Kind::column: r.cls = "column"; r.index = psi.index; break;
        case PsiValue::Kind::continuous: r.cls = "sloped"; r.value = psi.value; break;
        }
        return r;
    });
    const auto rows = run_trials<Row>(trials, cfg.workers, trial_fn);

    std::ostringstream csv;
    csv << "trial,class,index,value,dead_end\n";
    long row1 = 0, col1 = 0, sloped = 0, dead = 0;
    for (long t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t << ',' << r.cls << ',' << r.index << ',' << fmt(r.value) << ','
            << (r.dead_end ? 1 : 0) << '\n';
        if (r.cls == "row" && r.index == 1) ++row1;
        if (r.cls == "column" && r.index == 1) ++col1;
        if (r.cls == "sloped") ++sloped;
        if (r.dead_end) ++dead;
    }
    const double fr = static_cast<double>(row1) / static_cast<double>(trials);
    const double fc = static_cast<double>(col1) / static_cast<double>(trials);
    const double fs = static_cast<double>(sloped) / static_cast<double>(trials);
    const double a1 = p.alpha.empty() ? 0.0 : p.alpha[0];
    const double b1 = p.beta.empty() ? 0.0 : p.beta[0];

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"freq_row1", fr},    {"freq_col1", fc},      {"freq_sloped", fs},
                   {"expected_row1", a1}, {"expected_col1", b1},  {"expected_sloped", p.gamma},
                   {"dead_ends", dead},  {"tolerance", tol}};
    out.passed = std::abs(fr - a1) <= tol && std::abs(fc - b1) <= tol &&
                 std::abs(fs - p.gamma) <= tol && dead == 0;
    return out;
}

// ----------------------------------------------------------- theta-dist ----

RunResult run_theta_dist(const ExperimentConfig& cfg) {
    ThomaParams p;
    p.gamma = 1.0;
    if (cfg.thoma_set) p = cfg.thoma;
    const long n = cfg.n > 0 ? cfg.n : 4000;
    const long trials = cfg.trials > 0 ? cfg.trials : 1000;
    const double tol = cfg.tolerance("sup_distance", 0.05);

    auto trial_fn = std::function<double(long)>([&](long t) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const StandardTableau q = sample_vk_prefix(p, static_cast<std::size_t>(n), rng);
        const std::vector<Box> lp = lazy_path(q);
        const Box fin = lp.back();
        return std::atan2(static_cast<double>(fin.y), static_cast<double>(fin.x));
    });
    auto angles = run_trials<double>(trials, cfg.workers, trial_fn);

    std::ostringstream csv;
    csv << "trial,angle\n";
    for (long t = 0; t < trials; ++t) csv << t << ',' << fmt(angles[static_cast<size_t>(t)]) << '\n';

    std::vector<double> sorted = angles;
    std::sort(sorted.begin(), sorted.end());
    double sup = 0.0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        const double model = theta_cdf(sorted[i]);
        const double lo = static_cast<double>(i) / static_cast<double>(trials);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(trials);
        sup = std::max({sup, std::abs(model - lo), std::abs(model - hi)});
    }

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"sup_distance", sup}, {"tolerance", tol}, {"trials", trials}, {"n", n}};
    out.passed = sup <= tol;
    return out;
}

// ---------------------------------------------------------- frequencies ----

RunResult run_frequencies(const ExperimentConfig& cfg) {
    ThomaParams p;
    p.alpha = {0.6, 0.3};
    p.gamma = 0.1;
    if (cfg.thoma_set) p = cfg.thoma;
    const long n = cfg.n > 0 ? cfg.n : 5000;
    const long trials = cfg.trials > 0 ? cfg.trials : 200;
    const double tol = cfg.tolerance("mean_freq", 0.03);

    struct Row {
        std::vector<double> rows, cols;
    };
    auto trial_fn = std::function<Row(long)>([&](long t) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const Frequencies f = row_frequencies(sample_vk_prefix(p, static_cast<std::size_t>(n), rng));
        return Row{f.rows, f.columns};
    });
    const auto rows = run_trials<Row>(trials, cfg.workers, trial_fn);

    const size_t na = p.alpha.size(), nb = p.beta.size();
    std::vector<double> mean_rows(na, 0.0), mean_cols(nb, 0.0);
    std::ostringstream csv;
    csv << "trial";
    for (size_t i = 0; i < na; ++i) csv << ",row" << (i + 1);
    for (size_t i = 0; i < nb; ++i) csv << ",col" << (i + 1);
    csv << '\n';
    for (long t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t;
        for (size_t i = 0; i < na; ++i) {
            const double v = i < r.rows.size() ? r.rows[i] : 0.0;
            mean_rows[i] += v / static_cast<double>(trials);
            csv << ',' << fmt(v);
        }
        for (size_t i = 0; i < nb; ++i) {
            const double v = i < r.cols.size() ? r.cols[i] : 0.0;
            mean_cols[i] += v / static_cast<double>(trials);
            csv << ',' << fmt(v);
        }
        csv << '\n';
    }

    bool ok = true;
    for (size_t i = 0; i < na; ++i)
        if (std::abs(mean_rows[i] - p.alpha[i]) > tol) ok = false;
    for (size_t i = 0; i < nb; ++i)
        if (std::abs(mean_cols[i] - p.beta[i]) > tol) ok = false;

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"mean_rows", mean_rows}, {"mean_cols", mean_cols},
                   {"alpha", p.alpha},       {"beta", p.beta},
                   {"tolerance", tol}};
    out.passed = ok;
    return out;
}

// --------------------------------------------------------------- invert ----

RunResult run_invert(const ExperimentConfig& cfg) {
    const ThomaParams p = cfg.thoma_set ? cfg.thoma : default_thoma();
    const long n = cfg.n > 0 ? cfg.n : 5000;
    const long trials = cfg.trials > 0 ? cfg.trials : 100;
    const int k = cfg.k > 0 ? cfg.k : 20;
    const double tol_discrete = cfg.tolerance("discrete_accuracy", 0.95);
    const double tol_neutral = cfg.tolerance("neutral_mae", 0.05);

    struct Row {
        std::vector<Letter> truth;
        std::vector<PsiValue> recovered;
    };
    auto trial_fn = std::function<Row(long)>([&](long t) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const Word w = sample_word(p, static_cast<std::size_t>(n), rng);
        const StandardTableau q = recording_tableau(w);
        Row r;
        r.truth.assign(w.letters.begin(), w.letters.begin() + k);
        r.recovered = invert_prefix(q, k);
        return r;
    });
    const auto rows = run_trials<Row>(trials, cfg.workers, trial_fn);

    std::ostringstream csv;
    csv << "trial,pos,truth,recovered,abs_error\n";
    long discrete_total = 0, discrete_hit = 0, neutral_total = 0;
    double neutral_abs = 0.0;
    for (long t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        for (int i = 0; i < k; ++i) {
            const Letter& truth = r.truth[static_cast<size_t>(i)];
            const PsiValue& got = r.recovered[static_cast<size_t>(i)];
            const Letter rec = got.to_letter();
            double err = 0.0;
            if (truth.kind == LetterKind::neutral) {
                ++neutral_total;
                // a misclassified neutral counts with the maximal error
                err = got.kind == PsiValue::Kind::continuous ? std::abs(truth.value - got.value)
                                                            : 1.0;
                neutral_abs += err;
            } else {
                ++discrete_total;
                const bool hit = rec == truth;
                if (hit) ++discrete_hit;
                err = hit ? 0.0 : 1.0;
            }
            csv << t << ',' << (i + 1) << ',' << to_string(truth) << ',' << to_string(rec) << ','
                << fmt(err) << '\n';
        }
    }
    const double acc = discrete_total
                           ? static_cast<double>(discrete_hit) / static_cast<double>(discrete_total)
                           : 1.0;
    const double mae = neutral_total ? neutral_abs / static_cast<double>(neutral_total) : 0.0;

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"discrete_accuracy", acc},        {"neutral_mae", mae},
                   {"discrete_positions", discrete_total}, {"neutral_positions", neutral_total},
                   {"min_discrete_accuracy", tol_discrete}, {"max_neutral_mae", tol_neutral}};
    out.passed = acc >= tol_discrete && mae <= tol_neutral;
    return out;
}

// ------------------------------------------------------ limit-shape-grid ----

RunResult run_limit_shape_grid(const ExperimentConfig& cfg) {
    const long points = cfg.grid_points > 0 ? cfg.grid_points : 101;
    const double tol = cfg.tolerance("identity", 1e-9);

    std::ostringstream csv;
    csv << "w,x,y,u,theta\n";
    double worst = 0.0;
    for (long i = 0; i < points; ++i) {
        const double w = static_cast<double>(i) / static_cast<double>(points - 1);
        const ShapePoint pt = curve_point(w);
        const double u = pt.x - pt.y;
        const double theta = std::atan2(pt.y, pt.x);
        csv << fmt(w) << ',' << fmt(pt.x) << ',' << fmt(pt.y) << ',' << fmt(u) << ','
            << fmt(theta) << '\n';
        if (i > 0 && i + 1 < points) {
            // round trip through the angle CDF
            const ShapePoint q = curve_point(1.0 - w);
            const double back = theta_cdf(std::atan2(q.y, q.x));
            worst = std::max(worst, std::abs(back - w));
        }
    }

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"points", points}, {"max_round_trip_error", worst}, {"tolerance", tol}};
    out.passed = worst <= tol;
    return out;
}

// --------------------------------------------------------------- pitman ----

RunResult run_pitman(const ExperimentConfig& cfg) {
    const int dim = cfg.dimension > 0 ? cfg.dimension : 2;
    const long n = cfg.n > 0 ? cfg.n : 50;
    const long trials = cfg.trials > 0 ? cfg.trials : 10000;

    ThomaParams p;
    if (cfg.thoma_set) {
        p = cfg.thoma;
    } else {
        p.alpha.assign(static_cast<size_t>(dim), 1.0 / static_cast<double>(dim));
    }

    struct Row {
        bool weyl = true, conserved = true, greene = true;
        std::vector<int> final_lambda;
    };
    auto trial_fn = std::function<Row(long)>([&](long t) {
        Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
        const Word w = sample_word(p, static_cast<std::size_t>(n), rng);
        const auto lambdas = pitman_transform(w, dim);
        Row r;
        for (size_t m = 0; m < lambdas.size(); ++m) {
            const auto& lam = lambdas[m];
            long sum = 0;
            for (size_t i = 0; i < lam.size(); ++i) {
                sum += lam[i];
                if (i > 0 && lam[i] > lam[i - 1]) r.weyl = false;
            }
            if (sum != static_cast<long>(m)) r.conserved = false;
        }
        if (n <= kGreeneOracleBound) {
            const YoungDiagram g = greene_oracle(w);
            std::vector<int> lam(g.rows);
            lam.resize(static_cast<size_t>(dim), 0);
            r.greene = lam == lambdas.back();
        }
        r.final_lambda = lambdas.back();
        return r;
    });
    const auto rows = run_trials<Row>(trials, cfg.workers, trial_fn);

    std::ostringstream csv;
    csv << "trial";
    for (int i = 1; i <= dim; ++i) csv << ",lambda" << i;
    csv << ",weyl_ok,conservation_ok\n";
    long violations = 0;
    for (long t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<size_t>(t)];
        csv << t;
        for (int v : r.final_lambda) csv << ',' << v;
        csv << ',' << (r.weyl ? 1 : 0) << ',' << (r.conserved ? 1 : 0) << '\n';
        if (!r.weyl || !r.conserved || !r.greene) ++violations;
    }

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"dimension", dim}, {"n", n}, {"trials", trials}, {"violations", violations}};
    out.passed = violations == 0;
    return out;
}

// ------------------------------------------------------------------- s2 ----

RunResult run_s2(const ExperimentConfig& cfg) {
    const long trials = cfg.trials > 0 ? cfg.trials : 100000;
    const std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75, 1.0};

    std::ostringstream csv;
    csv << "alpha,exact,formula,monte_carlo,std_error\n";
    bool ok = true;
    json rows = json::array();
    for (size_t ai = 0; ai < alphas.size(); ++ai) {
        const double a = alphas[ai];
        ThomaParams p;
        if (a > 0.0) p.alpha = {a};
        p.gamma = 1.0 - a;
        const double exact = row_pair_probability(p);
        const double formula = 0.5 * (a * a + 1.0);

        long hits = 0;
        Rng rng(cfg.seed, 1000 + ai);
        for (long t = 0; t < trials; ++t) {
            Letter u = sample_letter(p, rng);
            Letter v = sample_letter(p, rng);
            while (u.kind == LetterKind::neutral && v.kind == LetterKind::neutral &&
                   u.value == v.value)
                v = sample_letter(p, rng);
            if (less_r(u, v, Orientation::jdt)) ++hits;
        }
        const double mc = static_cast<double>(hits) / static_cast<double>(trials);
        const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
        csv << fmt(a) << ',' << fmt(exact) << ',' << fmt(formula) << ',' << fmt(mc) << ','
            << fmt(se) << '\n';
        if (std::abs(exact - formula) > 1e-12) ok = false;
        if (std::abs(mc - exact) > 3.0 * se + 1e-12) ok = false;
        rows.push_back({{"alpha", a}, {"exact", exact}, {"mc", mc}, {"se", se}});
    }

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"cases", rows}, {"trials", trials}};
    out.passed = ok;
    return out;
}

// ------------------------------------------------------ property suites ----

// 6-letter pool the exhaustive corpora are built from.
const std::vector<Letter>& test_pool() {
    static const std::vector<Letter> pool = {Letter::Row(1),         Letter::Row(2),
                                             Letter::Col(1),         Letter::Col(2),
                                             Letter::Neutral(0.25),  Letter::Neutral(0.75)};
    return pool;
}

// Calls fn for every word of length 1..max_len over the pool, skipping
// words that repeat a neutral value.
void for_each_pool_word(int max_len, const std::function<void(const Word&)>& fn) {
    const auto& pool = test_pool();
    const int p = static_cast<int>(pool.size());
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
            while (i >= 0 && digits[static_cast<size_t>(i)] == p - 1)
                digits[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            digits[static_cast<size_t>(i)]++;
        }
    }
}

bool shift_duality_holds(const Word& w) {
    const StandardTableau q = recording_tableau(w);
    Word tail;
    tail.orientation = w.orientation;
    tail.letters.assign(w.letters.begin() + 1, w.letters.end());
    return jdt_transform(q) == recording_tableau(tail);
}

bool insertion_duality_holds(const Word& w) {
    const StandardTableau q = recording_tableau(w);
    const Box last = lazy_path(q).back();
    const StandardTableau qp = recording_tableau(w.reversed_phi());
    // box labeled n in the mirrored recording tableau
    const int n = static_cast<int>(w.size());
    for (size_t y = 0; y < qp.rows.size(); ++y)
        for (size_t x = 0; x < qp.rows[y].size(); ++x)
            if (qp.rows[y][x] == n)
                return last == Box{static_cast<int>(x) + 1, static_cast<int>(y) + 1};
    return false;
}

bool standardization_holds(const Word& w) {
    const std::vector<int> perm = standardize(w);
    Word std_word;
    std_word.orientation = Orientation::jdt;
    for (int r : perm) std_word.letters.push_back(Letter::Row(r));
    return recording_tableau(w) == recording_tableau(std_word);
}

Word random_pool_word(Rng& rng, int len) {
    // random word over the pool without repeated neutrals
    const auto& pool = test_pool();
    Word w;
    w.orientation = Orientation::jdt;
    bool used25 = false, used75 = false;
    for (int i = 0; i < len; ++i) {
        for (;;) {
            const Letter& a = pool[rng.next_below(pool.size())];
            if (a.kind == LetterKind::neutral) {
                const bool is25 = a.value == 0.25;
                if (is25 ? used25 : used75) continue;
                (is25 ? used25 : used75) = true;
            }
            w.letters.push_back(a);
            break;
        }
    }
    return w;
}

struct SuiteOutcome {
    long checked = 0;
    long failures = 0;
    json details;
};

SuiteOutcome suite_greene(std::uint64_t seed, int workers, int exhaustive_len) {
    SuiteOutcome out;
    for_each_pool_word(exhaustive_len, [&](const Word& w) {
        ++out.checked;
        if (!(rsk_shape(w) == greene_oracle(w))) ++out.failures;
    });
    // random words at the oracle bound, letters drawn from the default
    // Thoma mixture
    const ThomaParams p = default_thoma();
    const long random_trials = 10000;
    auto fn = std::function<int(long)>([&](long t) {
        Rng rng(seed, 500000 + static_cast<std::uint64_t>(t));
        const Word w = sample_word(p, kGreeneOracleBound, rng);
        return rsk_shape(w) == greene_oracle(w) ? 0 : 1;
    });
    for (int bad : run_trials<int>(random_trials, workers, fn)) {
        ++out.checked;
        out.failures += bad;
    }
    out.details = {{"exhaustive_max_len", exhaustive_len}, {"random_trials", random_trials}};
    return out;
}

SuiteOutcome suite_duality(std::uint64_t seed, int workers, int exhaustive_len) {
    SuiteOutcome out;
    for_each_pool_word(exhaustive_len, [&](const Word& w) {
        ++out.checked;
        if (!shift_duality_holds(w) || !insertion_duality_holds(w)) ++out.failures;
    });
    const ThomaParams p = default_thoma();
    const long random_trials = 10000;
    auto fn = std::function<int(long)>([&](long t) {
        Rng rng(seed, 600000 + static_cast<std::uint64_t>(t));
        const std::size_t len = 1 + rng.next_below(200);
        const Word w = sample_word(p, len, rng);
        return shift_duality_holds(w) && insertion_duality_holds(w) ? 0 : 1;
    });
    for (int bad : run_trials<int>(random_trials, workers, fn)) {
        ++out.checked;
        out.failures += bad;
    }
    out.details = {{"exhaustive_max_len", exhaustive_len}, {"random_trials", random_trials}};
    return out;
}

SuiteOutcome suite_standardization(std::uint64_t seed, int workers, int exhaustive_len) {
    SuiteOutcome out;
    for_each_pool_word(exhaustive_len, [&](const Word& w) {
        ++out.checked;
        if (!standardization_holds(w)) ++out.failures;
    });
    const ThomaParams p = default_thoma();
    const long random_trials = 10000;
    auto fn = std::function<int(long)>([&](long t) {
        Rng rng(seed, 700000 + static_cast<std::uint64_t>(t));
        const std::size_t len = 1 + rng.next_below(200);
        return standardization_holds(sample_word(p, len, rng)) ? 0 : 1;
    });
    for (int bad : run_trials<int>(random_trials, workers, fn)) {
        ++out.checked;
        out.failures += bad;
    }
    out.details = {{"exhaustive_max_len", exhaustive_len}, {"random_trials", random_trials}};
    return out;
}

// Total-variation distance between 6-box shape distributions of jdt-shifted
// prefixes and fresh samples.
SuiteOutcome suite_measure_preserving(std::uint64_t seed, int workers) {
    const int m = 6;
    const long trials = 100000;
    const double tol = 0.03;
    const ThomaParams p = default_thoma();

    struct Pair {
        std::vector<int> shifted, fresh;
    };
    auto fn = std::function<Pair(long)>([&](long t) {
        Rng rng1(seed, 800000 + static_cast<std::uint64_t>(t));
        Rng rng2(seed, 900000 + static_cast<std::uint64_t>(t));
        Pair pr;
        pr.shifted = jdt_transform(recording_tableau(sample_word(p, m + 1, rng1))).shape().rows;
        pr.fresh = recording_tableau(sample_word(p, m, rng2)).shape().rows;
        return pr;
    });
    const auto pairs = run_trials<Pair>(trials, workers, fn);

    std::map<std::vector<int>, long> hist_shifted, hist_fresh;
    for (const Pair& pr : pairs) {
        hist_shifted[pr.shifted]++;
        hist_fresh[pr.fresh]++;
    }
    double tv = 0.0;
    std::map<std::vector<int>, long> all = hist_shifted;
    for (const auto& [shape, cnt] : hist_fresh) all.try_emplace(shape, 0);
    for (const auto& [shape, cnt] : all) {
        const double a = static_cast<double>(hist_shifted[shape]) / static_cast<double>(trials);
        const double b = static_cast<double>(hist_fresh[shape]) / static_cast<double>(trials);
        tv += std::abs(a - b);
    }
    tv *= 0.5;

    SuiteOutcome out;
    out.checked = trials;
    out.failures = tv <= tol ? 0 : 1;
    out.details = {{"tv_distance", tv}, {"tolerance", tol}, {"boxes", m}};
    return out;
}

RunResult run_check(const ExperimentConfig& cfg) {
    const std::string& scope = cfg.suite;
    const int exhaustive_len = cfg.n > 0 ? static_cast<int>(cfg.n) : 8;
    json suites = json::object();
    bool ok = true;
    long total = 0;

    const auto record = [&](const std::string& name, const SuiteOutcome& so) {
        json j = so.details;
        j["checked"] = so.checked;
        j["failures"] = so.failures;
        suites[name] = j;
        ok = ok && so.failures == 0;
        total += so.checked;
    };

    if (scope == "all" || scope == "greene")
        record("greene", suite_greene(cfg.seed, cfg.workers, exhaustive_len));
    if (scope == "all" || scope == "duality")
        record("duality", suite_duality(cfg.seed, cfg.workers, exhaustive_len));
    if (scope == "all" || scope == "standardization")
        record("standardization", suite_standardization(cfg.seed, cfg.workers, exhaustive_len));
    if (scope == "all" || scope == "measure-preserving")
        record("measure-preserving", suite_measure_preserving(cfg.seed, cfg.workers));
    if (suites.empty()) throw std::invalid_argument("unknown property suite: " + scope);

    std::ostringstream csv;
    csv << "suite,checked,failures\n";
    for (const auto& [name, j] : suites.items())
        csv << name << ',' << j["checked"].get<long>() << ',' << j["failures"].get<long>() << '\n';

    RunResult out;
    out.csv = csv.str();
    out.summary = {{"suites", suites}, {"total_checked", total}};
    out.passed = ok;
    return out;
}

}  // namespace

// ------------------------------------------------------------- plumbing ----

ExperimentConfig ExperimentConfig::from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    ExperimentConfig cfg;
    cfg.experiment = j.value("experiment", "");
    if (j.contains("thoma")) {
        cfg.thoma = ThomaParams::from_json(j.at("thoma").dump());
        cfg.thoma_set = true;
    }
    cfg.n = j.value("n", 0L);
    cfg.trials = j.value("trials", 0L);
    cfg.seed = j.value("seed", 0ULL);
    cfg.workers = j.value("workers", 1);
    cfg.k = j.value("k", 0);
    cfg.dimension = j.value("dimension", 0);
    cfg.grid_points = j.value("grid_points", 0L);
    cfg.suite = j.value("suite", "all");
    if (j.contains("tolerances"))
        for (const auto& [name, v] : j.at("tolerances").items())
            cfg.tolerances[name] = v.get<double>();
    return cfg;
}

std::string ExperimentConfig::to_json() const {
    json j;
    j["experiment"] = experiment;
    if (thoma_set) j["thoma"] = json::parse(thoma.to_json());
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["k"] = k;
    j["dimension"] = dimension;
    j["grid_points"] = grid_points;
    j["suite"] = suite;
    json tols = json::object();
    for (const auto& [name, v] : tolerances) tols[name] = v;
    j["tolerances"] = tols;
    return j.dump();
}

std::string content_hash_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentReport run_experiment(const ExperimentConfig& config, const std::string& out_dir) {
    if (config.thoma_set) config.thoma.require_valid();

    RunResult r;
    if (config.experiment == "paths")
        r = run_paths(config);
    else if (config.experiment == "theta-dist")
        r = run_theta_dist(config);
    else if (config.experiment == "frequencies")
        r = run_frequencies(config);
    else if (config.experiment == "invert")
        r = run_invert(config);
    else if (config.experiment == "limit-shape-grid")
        r = run_limit_shape_grid(config);
    else if (config.experiment == "pitman")
        r = run_pitman(config);
    else if (config.experiment == "check")
        r = run_check(config);
    else if (config.experiment == "s2")
        r = run_s2(config);
    else
        throw std::invalid_argument("unknown experiment: " + config.experiment);

    r.summary["experiment"] = config.experiment;
    r.summary["passed"] = r.passed;
    r.summary["seed"] = config.seed;

    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec) throw std::runtime_error("cannot create output directory: " + out_dir);

        const auto write_file = [&](const std::string& name, const std::string& bytes) {
            std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write output file: " + name);
            f << bytes;
        };
        write_file("data.csv", r.csv);
        const std::string summary_text = r.summary.dump(2) + "\n";
        write_file("summary.json", summary_text);

        json manifest;
        manifest["config"] = json::parse(config.to_json());
        manifest["seed"] = config.seed;
        manifest["data_csv_fnv1a64"] = content_hash_hex(r.csv);
        write_file("manifest.json", manifest.dump(2) + "\n");
    }

    ExperimentReport rep;
    rep.passed = r.passed;
    rep.summary_json = r.summary.dump();
    return rep;
}

ExperimentReport run_property_suite(const std::string& scope, std::uint64_t seed, int workers) {
    ExperimentConfig cfg;
    cfg.experiment = "check";
    cfg.suite = scope;
    cfg.seed = seed;
    cfg.workers = workers;
    return run_experiment(cfg, "");
}

}  // namespace ytab
