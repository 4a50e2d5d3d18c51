#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ytab {

// Weakly decreasing positive row lengths, French convention: row 1 at the
// bottom.  The empty diagram has no rows.
struct YoungDiagram {
    std::vector<int> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> r) : rows(std::move(r)) {}

    bool valid() const {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] <= 0) return false;
            if (i > 0 && rows[i] > rows[i - 1]) return false;
        }
        return true;
    }

    std::size_t box_count() const {
        std::size_t n = 0;
        for (int r : rows) n += static_cast<std::size_t>(r);
        return n;
    }

    int row_length(int y) const {  // y >= 1
        return (y >= 1 && y <= static_cast<int>(rows.size())) ? rows[y - 1] : 0;
    }

    bool contains(int x, int y) const { return x >= 1 && x <= row_length(y); }

    // Whether adding a box at (x, y) yields a valid diagram.
    bool can_add(int x, int y) const {
        if (y < 1 || x < 1) return false;
        if (row_length(y) != x - 1) return false;
        return y == 1 || row_length(y - 1) >= x;
    }

    void add_box(int x, int y) {
        if (y == static_cast<int>(rows.size()) + 1)
            rows.push_back(0);
        rows[y - 1] = x;
    }

    std::vector<int> conjugate() const {
        std::vector<int> cols;
        if (rows.empty()) return cols;
        cols.assign(static_cast<size_t>(rows[0]), 0);
        for (size_t y = 0; y < rows.size(); ++y)
            for (int x = 0; x < rows[y]; ++x) cols[static_cast<size_t>(x)]++;
        return cols;
    }

    bool operator==(const YoungDiagram& o) const { return rows == o.rows; }

    std::string to_string() const;
};

// Position of a box: x = column, y = row, both starting at 1.
struct Box {
    int x = 0;
    int y = 0;
    bool operator==(const Box& o) const { return x == o.x && y == o.y; }
};

}  // namespace ytab
