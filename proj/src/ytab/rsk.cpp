#include "ytab/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ytab {

Box RskState::push(const Letter& a) {
    Letter cur = a;
    for (size_t y = 0; y < rows_.size(); ++y) {
        auto& row = rows_[y];
        // leftmost occupant o with NOT (o <_r cur); cur lands there, o bumps.
        auto it = std::lower_bound(row.begin(), row.end(), cur,
                                   [this](const Letter& occupant, const Letter& incoming) {
                                       return less_r(occupant, incoming, orientation_);
                                   });
        if (it == row.end()) {
            row.push_back(cur);
            return {static_cast<int>(row.size()), static_cast<int>(y) + 1};
        }
        std::swap(*it, cur);
    }
    rows_.emplace_back(1, cur);
    return {1, static_cast<int>(rows_.size())};
}

std::pair<SemistandardTableau, Box> insert_row(const SemistandardTableau& t, const Letter& a) {
    t.require_valid();
    RskState tmp(t.rows, t.orientation);
    const Box b = tmp.push(a);
    SemistandardTableau out;
    out.orientation = t.orientation;
    out.rows = tmp.rows();
    const std::string e = out.validation_error();
    if (!e.empty()) throw std::invalid_argument("insertion produced an invalid tableau: " + e);
    return {out, b};
}

SemistandardTableau insertion_tableau(const Word& w) {
    w.require_valid();
    RskState st(w.orientation);
    for (const Letter& a : w.letters) st.push(a);
    return st.tableau();
}

StandardTableau recording_tableau(const Word& w) {
    w.require_valid();
    RskState st(w.orientation);
    StandardTableau q;
    int k = 0;
    for (const Letter& a : w.letters) {
        const Box b = st.push(a);
        ++k;
        if (b.y == static_cast<int>(q.rows.size()) + 1) q.rows.emplace_back();
        q.rows[static_cast<size_t>(b.y - 1)].push_back(k);
    }
    return q;
}

YoungDiagram rsk_shape(const Word& w) {
    w.require_valid();
    RskState st(w.orientation);
    for (const Letter& a : w.letters) st.push(a);
    return st.shape();
}

std::vector<int> standardize(const Word& w) {
    w.require_valid();
    const size_t n = w.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        const Letter& a = w.letters[static_cast<size_t>(i)];
        const Letter& b = w.letters[static_cast<size_t>(j)];
        const Cmp c = compare(a, b, w.orientation);
        if (c != Cmp::equal) return c == Cmp::less;
        // equal letters: row letters keep index order, column letters reverse it
        return a.kind == LetterKind::row ? i < j : i > j;
    });
    std::vector<int> perm(n);
    for (size_t rank = 0; rank < n; ++rank)
        perm[static_cast<size_t>(order[rank])] = static_cast<int>(rank) + 1;
    return perm;
}

}  // namespace ytab
