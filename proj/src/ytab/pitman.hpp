#pragma once

#include <vector>

#include "ytab/word.hpp"

namespace ytab {

// Word over row letters R1..Rl viewed as a lattice walk: step m is the basis
// index of letter m, positions are running count vectors.
struct LatticeWalk {
    int dimension = 0;
    std::vector<int> steps;                    // 1-based basis indices
    std::vector<std::vector<int>> positions;   // positions[m] after m steps
};

LatticeWalk word_to_walk(const Word& w, int dimension);

// Prefix RSK shapes as l-vectors: the generalized Pitman transform of the
// walk.  Output has n + 1 entries starting from the origin.
std::vector<std::vector<int>> pitman_transform(const Word& w, int dimension);

}  // namespace ytab
