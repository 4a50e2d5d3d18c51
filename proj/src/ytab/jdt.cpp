#include "ytab/jdt.hpp"

#include <stdexcept>

namespace ytab {

namespace {

// Slides on a mutable copy; fills `path` and returns the slid rows with the
// final hole removed and entries decremented.
std::pair<StandardTableau, JdtPath> slide(const StandardTableau& t) {
    if (t.box_count() == 0) throw std::invalid_argument("jdt on an empty tableau");
    std::vector<std::vector<int>> rows = t.rows;

    JdtPath path;
    int x = 1, y = 1;
    path.boxes.push_back({1, 1});
    for (;;) {
        const bool has_right = y <= static_cast<int>(rows.size()) &&
                               x < static_cast<int>(rows[static_cast<size_t>(y - 1)].size());
        const bool has_up = y < static_cast<int>(rows.size()) &&
                            x <= static_cast<int>(rows[static_cast<size_t>(y)].size());
        if (!has_right && !has_up) break;
        bool take_right;
        if (has_right && has_up) {
            const int r = rows[static_cast<size_t>(y - 1)][static_cast<size_t>(x)];
            const int u = rows[static_cast<size_t>(y)][static_cast<size_t>(x - 1)];
            if (r == u) throw std::logic_error("jdt slide: tied entries in a standard tableau");
            take_right = r < u;
        } else {
            take_right = has_right;
        }
        if (take_right) {
            rows[static_cast<size_t>(y - 1)][static_cast<size_t>(x - 1)] =
                rows[static_cast<size_t>(y - 1)][static_cast<size_t>(x)];
            ++x;
        } else {
            rows[static_cast<size_t>(y - 1)][static_cast<size_t>(x - 1)] =
                rows[static_cast<size_t>(y)][static_cast<size_t>(x - 1)];
            ++y;
        }
        path.boxes.push_back({x, y});
    }

    // For n >= 2 the box with entry 2 is adjacent to (1,1), so the hole
    // always moves and ends on the growth frontier; the only observable dead
    // end is a path that never slid at all.
    path.complete = path.boxes.size() == 1;

    rows[static_cast<size_t>(y - 1)].pop_back();
    if (rows[static_cast<size_t>(y - 1)].empty()) rows.pop_back();
    for (auto& row : rows)
        for (int& e : row) --e;
    return {StandardTableau(std::move(rows)), std::move(path)};
}

}  // namespace

JdtPath jdt_path(const StandardTableau& t) { return slide(t).second; }

StandardTableau jdt_transform(const StandardTableau& t) { return slide(t).first; }

std::pair<StandardTableau, JdtPath> jdt_step(const StandardTableau& t) { return slide(t); }

std::vector<Box> lazy_path(const StandardTableau& t) {
    const JdtPath p = jdt_path(t);
    const std::size_t n = t.box_count();
    std::vector<Box> lazy;
    lazy.reserve(n);
    size_t k = 0;  // index into p.boxes of the current position
    for (std::size_t m = 1; m <= n; ++m) {
        while (k + 1 < p.boxes.size() &&
               t.entry(p.boxes[k + 1].x, p.boxes[k + 1].y) <= static_cast<int>(m))
            ++k;
        lazy.push_back(p.boxes[k]);
    }
    return lazy;
}

std::vector<std::pair<StandardTableau, JdtPath>> iterate_jdt(const StandardTableau& t, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > t.box_count())
        throw std::invalid_argument("iterate_jdt: step count exceeds box count");
    std::vector<std::pair<StandardTableau, JdtPath>> out;
    out.reserve(static_cast<size_t>(k));
    StandardTableau cur = t;
    for (int i = 0; i < k; ++i) {
        auto [next, path] = jdt_step(cur);
        out.emplace_back(next, std::move(path));
        cur = std::move(next);
    }
    return out;
}

}  // namespace ytab
