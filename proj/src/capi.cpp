#include "ytab.h"

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ytab/experiment.hpp"
#include "ytab/jdt.hpp"
#include "ytab/limit_shape.hpp"
#include "ytab/rsk.hpp"
#include "ytab/tableau.hpp"
#include "ytab/word.hpp"

extern "C" {

struct ytab_word {
    ytab::Word w;
};

struct ytab_tableau {
    ytab::StandardTableau t;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating C++ exceptions into status codes.
template <typename Fn>
ytab_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return YTAB_OK;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return YTAB_EDOMAIN;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return YTAB_EINVAL;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return YTAB_EINVAL;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return std::string(e.what()).find("output") != std::string::npos ? YTAB_EIO
                                                                         : YTAB_EINTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return YTAB_EINTERNAL;
    }
}

}  // namespace

extern "C" {

const char* ytab_status_name(ytab_status status) {
    switch (status) {
    case YTAB_OK: return "ok";
    case YTAB_EINVAL: return "invalid-argument";
    case YTAB_EDOMAIN: return "domain-error";
    case YTAB_EIO: return "io-error";
    case YTAB_EINTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* ytab_last_error(void) { return g_last_error.c_str(); }

void ytab_string_free(char* s) { delete[] s; }

ytab_status ytab_word_parse(const char* text, int insertion_orientation, ytab_word** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        const ytab::Orientation o =
            insertion_orientation ? ytab::Orientation::insertion : ytab::Orientation::jdt;
        auto* w = new ytab_word{ytab::Word::parse(text, o)};
        w->w.require_valid();
        *out = w;
    });
}

void ytab_word_free(ytab_word* w) { delete w; }

ytab_status ytab_word_to_string(const ytab_word* w, char** out) {
    if (!w || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] { *out = dup_string(w->w.to_string()); });
}

size_t ytab_word_length(const ytab_word* w) { return w ? w->w.size() : 0; }

ytab_status ytab_tableau_parse_json(const char* json_text, ytab_tableau** out) {
    if (!json_text || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        auto* t = new ytab_tableau{ytab::StandardTableau::from_json(json_text)};
        t->t.require_valid();
        *out = t;
    });
}

ytab_status ytab_tableau_to_json(const ytab_tableau* t, char** out) {
    if (!t || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] { *out = dup_string(t->t.to_json()); });
}

void ytab_tableau_free(ytab_tableau* t) { delete t; }

ytab_status ytab_recording_tableau(const ytab_word* w, ytab_tableau** out) {
    if (!w || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] { *out = new ytab_tableau{ytab::recording_tableau(w->w)}; });
}

ytab_status ytab_rsk_shape_json(const ytab_word* w, char** out) {
    if (!w || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        const ytab::YoungDiagram d = ytab::rsk_shape(w->w);
        *out = dup_string(nlohmann::json(d.rows).dump());
    });
}

ytab_status ytab_jdt_transform(const ytab_tableau* t, ytab_tableau** out) {
    if (!t || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] { *out = new ytab_tableau{ytab::jdt_transform(t->t)}; });
}

ytab_status ytab_jdt_path_json(const ytab_tableau* t, char** out) {
    if (!t || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        const ytab::JdtPath p = ytab::jdt_path(t->t);
        nlohmann::json boxes = nlohmann::json::array();
        for (const ytab::Box& b : p.boxes) boxes.push_back({b.x, b.y});
        nlohmann::json j = {{"boxes", boxes}, {"complete", p.complete}};
        *out = dup_string(j.dump());
    });
}

ytab_status ytab_lazy_path_json(const ytab_tableau* t, char** out) {
    if (!t || !out) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        nlohmann::json j = nlohmann::json::array();
        for (const ytab::Box& b : ytab::lazy_path(t->t)) j.push_back({b.x, b.y});
        *out = dup_string(j.dump());
    });
}

double ytab_omega(double u) { return ytab::omega(u); }

double ytab_semicircle_cdf(double u) { return ytab::semicircle_cdf(u); }

ytab_status ytab_curve_point(double w, double* x, double* y) {
    if (!x || !y) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        const ytab::ShapePoint p = ytab::curve_point(w);
        *x = p.x;
        *y = p.y;
    });
}

double ytab_pi_angle(double u) { return ytab::pi_angle(u); }

double ytab_theta_cdf(double theta) { return ytab::theta_cdf(theta); }

ytab_status ytab_run_experiment(const char* config_json, const char* out_dir,
                                char** summary_json_out, int* passed_out) {
    if (!config_json) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        const ytab::ExperimentConfig cfg = ytab::ExperimentConfig::from_json(config_json);
        const ytab::ExperimentReport rep =
            ytab::run_experiment(cfg, out_dir ? std::string(out_dir) : std::string());
        if (summary_json_out) *summary_json_out = dup_string(rep.summary_json);
        if (passed_out) *passed_out = rep.passed ? 1 : 0;
    });
}

ytab_status ytab_run_property_suite(const char* scope, unsigned long long seed, int workers,
                                    char** summary_json_out, int* passed_out) {
    if (!scope) {
        g_last_error = "null argument";
        return YTAB_EINVAL;
    }
    return guarded([&] {
        const ytab::ExperimentReport rep = ytab::run_property_suite(scope, seed, workers);
        if (summary_json_out) *summary_json_out = dup_string(rep.summary_json);
        if (passed_out) *passed_out = rep.passed ? 1 : 0;
    });
}

}  // extern "C"
