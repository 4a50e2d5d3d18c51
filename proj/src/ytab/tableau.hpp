#pragma once

#include <string>
#include <vector>

#include "ytab/diagram.hpp"
#include "ytab/letter.hpp"

namespace ytab {

// Bijective filling of a Young diagram with 1..n, rows and columns strictly
// increasing.  Finite prefix of an infinite Young tableau, equivalently a
// path in the Young graph.
struct StandardTableau {
    std::vector<std::vector<int>> rows;  // rows[y-1][x-1], French convention

    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    std::size_t box_count() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.size();
        return n;
    }

    YoungDiagram shape() const {
        YoungDiagram d;
        d.rows.reserve(rows.size());
        for (const auto& r : rows) d.rows.push_back(static_cast<int>(r.size()));
        return d;
    }

    int entry(int x, int y) const { return rows[static_cast<size_t>(y - 1)][static_cast<size_t>(x - 1)]; }
    bool contains(int x, int y) const {
        return y >= 1 && y <= static_cast<int>(rows.size()) &&
               x >= 1 && x <= static_cast<int>(rows[static_cast<size_t>(y - 1)].size());
    }

    // Empty string when valid, otherwise names the violated box.
    std::string validation_error() const;
    void require_valid() const;

    bool operator==(const StandardTableau& o) const { return rows == o.rows; }

    // JSON: {"rows": [[row 1 entries], [row 2], ...]}
    static StandardTableau from_json(const std::string& json_text);
    std::string to_json() const;
};

// Prefix shapes (empty diagram, then one box added per step).
std::vector<YoungDiagram> to_path(const StandardTableau& t);
StandardTableau from_path(const std::vector<YoungDiagram>& path);

// Filling of a diagram with letters, rows <_r-increasing left to right and
// columns <_c-increasing bottom to top.
struct SemistandardTableau {
    std::vector<std::vector<Letter>> rows;
    Orientation orientation = Orientation::jdt;

    std::size_t box_count() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.size();
        return n;
    }

    YoungDiagram shape() const {
        YoungDiagram d;
        d.rows.reserve(rows.size());
        for (const auto& r : rows) d.rows.push_back(static_cast<int>(r.size()));
        return d;
    }

    std::string validation_error() const;
    void require_valid() const;

    static SemistandardTableau from_json(const std::string& json_text, Orientation o);
    std::string to_json() const;
};

}  // namespace ytab
