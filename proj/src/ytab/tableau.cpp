#include "ytab/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ytab {

namespace {

std::string box_msg(const char* what, int x, int y) {
    std::ostringstream os;
    os << what << " at box (" << x << ", " << y << ")";
    return os.str();
}

}  // namespace

std::string StandardTableau::validation_error() const {
    if (!shape().valid()) return "row lengths are not weakly decreasing";
    const std::size_t n = box_count();
    std::vector<bool> seen(n + 1, false);
    for (size_t y = 0; y < rows.size(); ++y) {
        for (size_t x = 0; x < rows[y].size(); ++x) {
            const int e = rows[y][x];
            if (e < 1 || e > static_cast<int>(n))
                return box_msg("entry out of range", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
            if (seen[static_cast<size_t>(e)])
                return box_msg("duplicate entry", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
            seen[static_cast<size_t>(e)] = true;
            if (x > 0 && rows[y][x - 1] >= e)
                return box_msg("row not increasing", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
            if (y > 0 && rows[y - 1][x] >= e)
                return box_msg("column not increasing", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
        }
    }
    return {};
}

void StandardTableau::require_valid() const {
    const std::string e = validation_error();
    if (!e.empty()) throw std::invalid_argument("invalid standard tableau: " + e);
}

StandardTableau StandardTableau::from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    StandardTableau t;
    t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    return t;
}

std::string StandardTableau::to_json() const {
    nlohmann::json j;
    j["rows"] = rows;
    return j.dump();
}

std::vector<YoungDiagram> to_path(const StandardTableau& t) {
    t.require_valid();
    const std::size_t n = t.box_count();
    // box holding entry k
    std::vector<Box> where(n + 1);
    for (size_t y = 0; y < t.rows.size(); ++y)
        for (size_t x = 0; x < t.rows[y].size(); ++x)
            where[static_cast<size_t>(t.rows[y][x])] = {static_cast<int>(x) + 1, static_cast<int>(y) + 1};

    std::vector<YoungDiagram> path;
    path.reserve(n + 1);
    YoungDiagram d;
    path.push_back(d);
    for (std::size_t k = 1; k <= n; ++k) {
        d.add_box(where[k].x, where[k].y);
        path.push_back(d);
    }
    return path;
}

StandardTableau from_path(const std::vector<YoungDiagram>& path) {
    if (path.empty() || !path.front().rows.empty())
        throw std::invalid_argument("path must start with the empty diagram");
    StandardTableau t;
    for (size_t k = 1; k < path.size(); ++k) {
        const YoungDiagram& prev = path[k - 1];
        const YoungDiagram& cur = path[k];
        // locate the single added box
        Box added{0, 0};
        int changes = 0;
        const size_t nrows = std::max(prev.rows.size(), cur.rows.size());
        for (size_t y = 0; y < nrows; ++y) {
            const int a = prev.row_length(static_cast<int>(y) + 1);
            const int b = cur.row_length(static_cast<int>(y) + 1);
            if (a == b) continue;
            if (b != a + 1) changes = -1000;
            ++changes;
            added = {b, static_cast<int>(y) + 1};
        }
        if (changes != 1 || !prev.can_add(added.x, added.y) || !cur.valid())
            throw std::invalid_argument("consecutive diagrams do not differ by one added box");
        if (added.y == static_cast<int>(t.rows.size()) + 1) t.rows.emplace_back();
        t.rows[static_cast<size_t>(added.y - 1)].push_back(static_cast<int>(k));
    }
    return t;
}

std::string SemistandardTableau::validation_error() const {
    if (!shape().valid()) return "row lengths are not weakly decreasing";
    std::vector<double> neutrals;
    for (size_t y = 0; y < rows.size(); ++y) {
        for (size_t x = 0; x < rows[y].size(); ++x) {
            const Letter& e = rows[y][x];
            if (e.kind == LetterKind::neutral) neutrals.push_back(e.value);
            try {
                if (x > 0 && !less_r(rows[y][x - 1], e, orientation))
                    return box_msg("row not <_r-increasing", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
                if (y > 0 && !less_c(rows[y - 1][x], e, orientation))
                    return box_msg("column not <_c-increasing", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
            } catch (const std::domain_error&) {
                return box_msg("repeated neutral letter", static_cast<int>(x) + 1, static_cast<int>(y) + 1);
            }
        }
    }
    std::sort(neutrals.begin(), neutrals.end());
    if (std::adjacent_find(neutrals.begin(), neutrals.end()) != neutrals.end())
        return "neutral letter value repeats within the tableau";
    return {};
}

void SemistandardTableau::require_valid() const {
    const std::string e = validation_error();
    if (!e.empty()) throw std::invalid_argument("invalid semistandard tableau: " + e);
}

SemistandardTableau SemistandardTableau::from_json(const std::string& json_text, Orientation o) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    SemistandardTableau t;
    t.orientation = o;
    for (const auto& row : j.at("rows")) {
        t.rows.emplace_back();
        for (const auto& tok : row) t.rows.back().push_back(parse_letter(tok.get<std::string>()));
    }
    return t;
}

std::string SemistandardTableau::to_json() const {
    nlohmann::json j;
    auto& out = j["rows"];
    out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Letter& a : row) r.push_back(to_string(a));
        out.push_back(r);
    }
    return j.dump();
}

}  // namespace ytab
