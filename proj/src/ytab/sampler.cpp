#include "ytab/sampler.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ytab {

Word sample_word(const ThomaParams& p, std::size_t n, Rng& rng, std::size_t* collisions) {
    p.require_valid();
    Word w;
    w.orientation = Orientation::jdt;
    w.letters.reserve(n);
    std::unordered_set<double> used_neutrals;
    std::size_t clashes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Letter a = sample_letter(p, rng);
        while (a.kind == LetterKind::neutral && used_neutrals.count(a.value)) {
            ++clashes;
            a = sample_letter(p, rng);
        }
        if (a.kind == LetterKind::neutral) used_neutrals.insert(a.value);
        w.letters.push_back(a);
    }
    if (collisions) *collisions = clashes;
    return w;
}

StandardTableau sample_vk_prefix(const ThomaParams& p, std::size_t n, Rng& rng) {
    return recording_tableau(sample_word(p, n, rng));
}

Frequencies row_frequencies(const StandardTableau& t) {
    const std::size_t n = t.box_count();
    if (n == 0) throw std::invalid_argument("row_frequencies: empty tableau");
    const YoungDiagram d = t.shape();
    Frequencies f;
    for (int r : d.rows) f.rows.push_back(static_cast<double>(r) / static_cast<double>(n));
    for (int c : d.conjugate()) f.columns.push_back(static_cast<double>(c) / static_cast<double>(n));
    return f;
}

double row_pair_probability(const ThomaParams& p) {
    p.require_valid();
    double alpha_sum = 0.0, alpha_sq = 0.0;
    for (double a : p.alpha) {
        alpha_sum += a;
        alpha_sq += a * a;
    }
    double beta_sum = 0.0;
    for (double b : p.beta) beta_sum += b;
    const double g = p.gamma;

    // atoms listed bottom-up in the jdt order: R1, R2, ... then (neutral
    // band) then ..., C2, C1.  P(u < v) sums over strictly ordered pairs.
    double strict = 0.0;
    // row atom below a later row atom
    for (size_t i = 0; i < p.alpha.size(); ++i)
        for (size_t j = i + 1; j < p.alpha.size(); ++j) strict += p.alpha[i] * p.alpha[j];
    // column atom pairs: C_j < C_i for j > i
    for (size_t i = 0; i < p.beta.size(); ++i)
        for (size_t j = i + 1; j < p.beta.size(); ++j) strict += p.beta[j] * p.beta[i];
    // row atom below any column atom
    strict += alpha_sum * beta_sum;
    // row atom below a neutral, neutral below a column atom
    strict += alpha_sum * g + g * beta_sum;
    // two distinct neutrals, first smaller
    strict += 0.5 * g * g;

    return alpha_sq + strict;
}

}  // namespace ytab
