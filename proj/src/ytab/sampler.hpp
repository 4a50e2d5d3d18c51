#pragma once

#include <cstdint>
#include <vector>

#include "ytab/rsk.hpp"
#include "ytab/thoma.hpp"
#include "ytab/word.hpp"

namespace ytab {

// n i.i.d. letters under the jdt-alphabet distribution attached to p.
// Neutral collisions (probability zero in exact arithmetic) are resampled;
// the count of resamples is reported through `collisions` when given.
Word sample_word(const ThomaParams& p, std::size_t n, Rng& rng, std::size_t* collisions = nullptr);

// Recording tableau of a sampled word: an n-box prefix with the law of the
// n-box marginal of the Vershik-Kerov measure.
StandardTableau sample_vk_prefix(const ThomaParams& p, std::size_t n, Rng& rng);

struct Frequencies {
    std::vector<double> rows;     // lambda_i / n
    std::vector<double> columns;  // lambda'_i / n
};

Frequencies row_frequencies(const StandardTableau& t);

// Exact probability that two i.i.d. letters (u, v) fill the shape (2)
// semistandardly, i.e. u <_r v.
double row_pair_probability(const ThomaParams& p);

}  // namespace ytab
