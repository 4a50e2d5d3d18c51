#pragma once

#include "ytab/diagram.hpp"
#include "ytab/word.hpp"

namespace ytab {

inline constexpr int kGreeneOracleBound = 10;

// Exact Greene invariants by exhaustive subsequence-decomposition search,
// independent of the insertion code path.  Partial row sums are the maximal
// lengths of subsequences decomposable into k disjoint <_r-increasing
// subsequences; partial column sums are cross-checked against <_c-decreasing
// decompositions.  Throws when |w| exceeds the bound or the two computations
// disagree.
YoungDiagram greene_oracle(const Word& w, int bound = kGreeneOracleBound);

}  // namespace ytab
