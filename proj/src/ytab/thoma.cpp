#include "ytab/thoma.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ytab {

namespace {

std::string check_weakly_decreasing(const std::vector<double>& v, const char* name) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0 || !std::isfinite(v[i])) {
            std::ostringstream os;
            os << name << "[" << i << "] is negative or not finite";
            return os.str();
        }
        if (i > 0 && v[i] > v[i - 1]) {
            std::ostringstream os;
            os << name << " is not weakly decreasing at position " << i;
            return os.str();
        }
    }
    return {};
}

}  // namespace

std::string ThomaParams::validation_error() const {
    if (auto e = check_weakly_decreasing(alpha, "alpha"); !e.empty()) return e;
    if (auto e = check_weakly_decreasing(beta, "beta"); !e.empty()) return e;
    if (gamma < 0.0 || !std::isfinite(gamma)) return "gamma is negative or not finite";
    const double sum = std::accumulate(alpha.begin(), alpha.end(), 0.0) +
                       std::accumulate(beta.begin(), beta.end(), 0.0) + gamma;
    if (std::abs(sum - 1.0) > kSumTolerance) {
        std::ostringstream os;
        os << "alpha, beta, gamma must sum to 1 (got " << sum << ")";
        return os.str();
    }
    return {};
}

void ThomaParams::require_valid() const {
    const std::string e = validation_error();
    if (!e.empty()) throw std::invalid_argument("invalid Thoma parameters: " + e);
}

ThomaParams ThomaParams::from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    ThomaParams p;
    if (j.contains("alpha")) p.alpha = j.at("alpha").get<std::vector<double>>();
    if (j.contains("beta")) p.beta = j.at("beta").get<std::vector<double>>();
    if (j.contains("gamma")) p.gamma = j.at("gamma").get<double>();
    return p;
}

std::string ThomaParams::to_json() const {
    nlohmann::json j;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["gamma"] = gamma;
    return j.dump();
}

Letter sample_letter(const ThomaParams& p, Rng& rng) {
    p.require_valid();
    const double u = rng.next_double();
    double acc = 0.0;
    for (size_t i = 0; i < p.alpha.size(); ++i) {
        acc += p.alpha[i];
        if (u < acc) return Letter::Row(static_cast<int>(i) + 1);
    }
    for (size_t i = 0; i < p.beta.size(); ++i) {
        acc += p.beta[i];
        if (u < acc) return Letter::Col(static_cast<int>(i) + 1);
    }
    return Letter::Neutral(rng.next_open01());
}

}  // namespace ytab
