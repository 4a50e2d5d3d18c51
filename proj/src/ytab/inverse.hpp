#pragma once

#include <vector>

#include "ytab/jdt.hpp"
#include "ytab/limit_shape.hpp"

namespace ytab {

// Finite-truncation estimator of the inverse RSK map: classify the lazy jdt
// path of t, then of j(t), and so on, k times.  Position i is classified on
// a tableau with n - i + 1 boxes, so k must leave at least the classifier
// minimum.
std::vector<PsiValue> invert_prefix(const StandardTableau& t, int k,
                                    int min_prefix = kClassifyMinPrefix);

}  // namespace ytab
