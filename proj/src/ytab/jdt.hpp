#pragma once

#include <vector>

#include "ytab/tableau.hpp"

namespace ytab {

// Trajectory of the empty cell created by removing box (1,1).  Starts at
// (1,1); every step increments exactly one coordinate.  `complete` marks a
// dead end: the hole never slid because both candidate boxes were absent.
// For any tableau with n >= 2 boxes the entry 2 sits next to (1,1) and the
// path ends on the growth frontier instead, so experiments counting dead
// ends expect the flag to stay false.
struct JdtPath {
    std::vector<Box> boxes;
    bool complete = false;
};

JdtPath jdt_path(const StandardTableau& t);

// Remove (1,1), slide along the jdt path, subtract 1 from every entry.
StandardTableau jdt_transform(const StandardTableau& t);

// Combined single pass: the transformed tableau plus the path it slid along.
std::pair<StandardTableau, JdtPath> jdt_step(const StandardTableau& t);

// Lazy reparametrization, indexed m = 1..n: lazy[m-1] = p_{K(m)} where
// K(m) is the largest k such that the tableau entry at p_k is <= m.
std::vector<Box> lazy_path(const StandardTableau& t);

// k successive jdt steps with each step's path recorded.
std::vector<std::pair<StandardTableau, JdtPath>> iterate_jdt(const StandardTableau& t, int k);

}  // namespace ytab
