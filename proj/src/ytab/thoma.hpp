#pragma once

#include <string>
#include <vector>

#include "ytab/letter.hpp"
#include "ytab/rng.hpp"

namespace ytab {

// A point of the Thoma simplex with finitely many nonzero entries:
// alpha, beta weakly decreasing and nonnegative, sum(alpha)+sum(beta)+gamma = 1.
struct ThomaParams {
    std::vector<double> alpha;
    std::vector<double> beta;
    double gamma = 0.0;

    static constexpr double kSumTolerance = 1e-9;

    // Empty string when valid, otherwise a description of the violated
    // invariant.
    std::string validation_error() const;
    bool valid() const { return validation_error().empty(); }
    void require_valid() const;

    static ThomaParams from_json(const std::string& json_text);
    std::string to_json() const;
};

// One draw from the letter distribution: R(i) w.p. alpha[i-1], C(i) w.p.
// beta[i-1], otherwise a fresh uniform neutral letter.
Letter sample_letter(const ThomaParams& p, Rng& rng);

}  // namespace ytab
