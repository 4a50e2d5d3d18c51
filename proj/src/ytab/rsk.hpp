#pragma once

#include <vector>

#include "ytab/tableau.hpp"
#include "ytab/word.hpp"

namespace ytab {

// Incremental Schensted insertion.  Keeps only the insertion tableau rows;
// push() returns the box where the shape grew.
class RskState {
public:
    explicit RskState(Orientation o) : orientation_(o) {}
    RskState(std::vector<std::vector<Letter>> rows, Orientation o)
        : rows_(std::move(rows)), orientation_(o) {}

    Box push(const Letter& a);

    const std::vector<std::vector<Letter>>& rows() const { return rows_; }
    Orientation orientation() const { return orientation_; }

    YoungDiagram shape() const {
        YoungDiagram d;
        d.rows.reserve(rows_.size());
        for (const auto& r : rows_) d.rows.push_back(static_cast<int>(r.size()));
        return d;
    }

    SemistandardTableau tableau() const {
        SemistandardTableau t;
        t.rows = rows_;
        t.orientation = orientation_;
        return t;
    }

private:
    std::vector<std::vector<Letter>> rows_;
    Orientation orientation_;
};

// Single row insertion t <- a; returns the updated tableau and the new box.
std::pair<SemistandardTableau, Box> insert_row(const SemistandardTableau& t, const Letter& a);

SemistandardTableau insertion_tableau(const Word& w);
StandardTableau recording_tableau(const Word& w);
YoungDiagram rsk_shape(const Word& w);

// Ranking of the word's positions under the lexicographic (letter, index)
// comparison: equal row letters keep index order, equal column letters
// reverse it.  perm[i] is the rank (1-based) of position i.
std::vector<int> standardize(const Word& w);

}  // namespace ytab
