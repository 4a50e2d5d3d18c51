#include <doctest.h>

#include <vector>

#include "ytab/greene.hpp"
#include "ytab/pitman.hpp"
#include "ytab/sampler.hpp"

using namespace ytab;

namespace {

Word row_word(std::vector<int> indices) {
    Word w;
    w.orientation = Orientation::jdt;
    for (int i : indices) w.letters.push_back(Letter::Row(i));
    return w;
}

}  // namespace

TEST_CASE("word to walk") {
    const LatticeWalk walk = word_to_walk(row_word({1, 2, 1}), 2);
    CHECK(walk.steps == std::vector<int>{1, 2, 1});
    REQUIRE(walk.positions.size() == 3);
    CHECK(walk.positions[0] == std::vector<int>{1, 0});
    CHECK(walk.positions[1] == std::vector<int>{1, 1});
    CHECK(walk.positions[2] == std::vector<int>{2, 1});

    CHECK(word_to_walk(row_word({}), 3).positions.empty());
    const LatticeWalk rep = word_to_walk(row_word({1, 1}), 2);
    CHECK(rep.positions[1] == std::vector<int>{2, 0});

    Word bad = row_word({1});
    bad.letters.push_back(Letter::Col(1));
    CHECK_THROWS_AS(word_to_walk(bad, 2), std::invalid_argument);
    CHECK_THROWS_AS(word_to_walk(row_word({3}), 2), std::invalid_argument);
}

TEST_CASE("pitman transform is the prefix shape process") {
    const auto lam = pitman_transform(row_word({1, 2, 1}), 2);
    REQUIRE(lam.size() == 4);
    CHECK(lam[0] == std::vector<int>{0, 0});
    CHECK(lam[1] == std::vector<int>{1, 0});
    CHECK(lam[2] == std::vector<int>{2, 0});
    CHECK(lam[3] == std::vector<int>{2, 1});

    const auto flat = pitman_transform(row_word({1, 1, 1}), 2);
    CHECK(flat.back() == std::vector<int>{3, 0});

    const auto bump = pitman_transform(row_word({2, 1}), 2);
    CHECK(bump[1] == std::vector<int>{1, 0});
    CHECK(bump[2] == std::vector<int>{1, 1});
}

TEST_CASE("pitman invariants on random words") {
    for (int dim : {2, 3}) {
        ThomaParams p;
        p.alpha.assign(static_cast<size_t>(dim), 1.0 / dim);
        // nudge the tail so the sum is exactly 1
        p.gamma = 1.0;
        for (double a : p.alpha) p.gamma -= a;
        if (p.gamma < 0) p.gamma = 0;
        Rng rng(17 + dim);
        for (int t = 0; t < 200; ++t) {
            const Word w = sample_word(p, 30, rng);
            const auto lam = pitman_transform(w, dim);
            for (size_t m = 0; m < lam.size(); ++m) {
                int sum = 0;
                for (size_t i = 0; i < lam[m].size(); ++i) {
                    sum += lam[m][i];
                    if (i > 0) CHECK(lam[m][i] <= lam[m][i - 1]);
                }
                CHECK(sum == static_cast<int>(m));
            }
        }
    }
}

TEST_CASE("pitman final shape matches the exhaustive oracle") {
    ThomaParams p;
    p.alpha = {0.5, 0.5};
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const Word w = sample_word(p, 8, rng);
        std::vector<int> lam(greene_oracle(w).rows);
        lam.resize(2, 0);
        CHECK(pitman_transform(w, 2).back() == lam);
    }
}
