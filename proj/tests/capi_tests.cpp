// Exercises the shared-library surface end to end.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "ytab.h"

namespace {

int failures = 0;

void check(bool ok, const char* what) {
    if (!ok) {
        ++failures;
        std::fprintf(stderr, "FAIL: %s (last error: %s)\n", what, ytab_last_error());
    }
}

}  // namespace

int main() {
    check(std::strcmp(ytab_status_name(YTAB_OK), "ok") == 0, "status name");

    ytab_word* w = nullptr;
    check(ytab_word_parse("R2 R1 R3", 0, &w) == YTAB_OK, "parse word");
    check(ytab_word_length(w) == 3, "word length");

    char* text = nullptr;
    check(ytab_word_to_string(w, &text) == YTAB_OK, "word to string");
    check(text && std::strcmp(text, "R2 R1 R3") == 0, "word text round trip");
    ytab_string_free(text);

    char* shape = nullptr;
    check(ytab_rsk_shape_json(w, &shape) == YTAB_OK, "rsk shape");
    check(shape && std::strcmp(shape, "[2,1]") == 0, "rsk shape value");
    ytab_string_free(shape);

    ytab_tableau* q = nullptr;
    check(ytab_recording_tableau(w, &q) == YTAB_OK, "recording tableau");
    char* qjson = nullptr;
    check(ytab_tableau_to_json(q, &qjson) == YTAB_OK, "tableau json");
    check(qjson && std::strcmp(qjson, R"({"rows":[[1,3],[2]]})") == 0, "tableau json value");
    ytab_string_free(qjson);

    char* path = nullptr;
    check(ytab_jdt_path_json(q, &path) == YTAB_OK, "jdt path");
    check(path && std::strcmp(path, R"({"boxes":[[1,1],[1,2]],"complete":false})") == 0,
          "jdt path value");
    ytab_string_free(path);

    char* lazy = nullptr;
    check(ytab_lazy_path_json(q, &lazy) == YTAB_OK, "lazy path");
    check(lazy && std::strcmp(lazy, "[[1,1],[1,2],[1,2]]") == 0, "lazy path value");
    ytab_string_free(lazy);

    ytab_tableau* next = nullptr;
    check(ytab_jdt_transform(q, &next) == YTAB_OK, "jdt transform");
    char* njson = nullptr;
    check(ytab_tableau_to_json(next, &njson) == YTAB_OK, "transformed json");
    check(njson && std::strcmp(njson, R"({"rows":[[1,2]]})") == 0, "transformed value");
    ytab_string_free(njson);
    ytab_tableau_free(next);
    ytab_tableau_free(q);
    ytab_word_free(w);

    // parse failures surface as status codes, not crashes
    ytab_word* bad = nullptr;
    check(ytab_word_parse("R0", 0, &bad) == YTAB_EINVAL, "bad letter rejected");
    check(ytab_word_parse("N0.5 N0.5", 0, &bad) == YTAB_EINVAL, "repeated neutral rejected");
    check(std::strlen(ytab_last_error()) > 0, "error message populated");

    ytab_tableau* t = nullptr;
    check(ytab_tableau_parse_json(R"({"rows":[[2,1]]})", &t) == YTAB_EINVAL,
          "invalid tableau rejected");
    check(ytab_tableau_parse_json(R"({"rows":[[1,3],[2]]})", &t) == YTAB_OK, "tableau parse");
    ytab_tableau_free(t);

    check(std::fabs(ytab_omega(0.0) - 4.0 / 3.14159265358979323846) < 1e-12, "omega");
    check(std::fabs(ytab_semicircle_cdf(0.0) - 0.5) < 1e-12, "semicircle cdf");
    double x = 0.0, y = 0.0;
    check(ytab_curve_point(0.5, &x, &y) == YTAB_OK, "curve point");
    check(std::fabs(x - y) < 1e-9, "curve point symmetry");
    check(std::fabs(ytab_pi_angle(0.0) - 0.25 * 3.14159265358979323846) < 1e-12, "pi angle");
    check(std::fabs(ytab_theta_cdf(0.25 * 3.14159265358979323846) - 0.5) < 1e-9, "theta cdf");
    check(ytab_curve_point(1.5, &x, &y) == YTAB_EDOMAIN, "curve point domain error");

    char* summary = nullptr;
    int passed = 0;
    const char* cfg =
        R"({"experiment":"limit-shape-grid","grid_points":21,"seed":1})";
    check(ytab_run_experiment(cfg, nullptr, &summary, &passed) == YTAB_OK, "run experiment");
    check(passed == 1, "grid experiment passes");
    check(summary && std::string(summary).find("max_round_trip_error") != std::string::npos,
          "summary content");
    ytab_string_free(summary);

    check(ytab_run_experiment(R"({"experiment":"nope"})", nullptr, nullptr, nullptr) ==
              YTAB_EINVAL,
          "unknown experiment rejected");

    if (failures) {
        std::fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    std::printf("all C API checks passed\n");
    return 0;
}
