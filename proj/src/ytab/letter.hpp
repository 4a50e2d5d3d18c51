#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ytab {

// A letter is either a row letter R(k), a column letter C(k), or a neutral
// letter N(x) with x in the open interval (0,1).  Row and column letters keep
// their identity under both alphabet orientations; only the linear order
// changes.
enum class LetterKind : std::uint8_t { row, column, neutral };

enum class Orientation : std::uint8_t { jdt, insertion };

struct Letter {
    LetterKind kind = LetterKind::row;
    int index = 1;        // valid for row/column kinds, >= 1
    double value = 0.0;   // valid for neutral kind, in (0,1)

    static Letter Row(int k) {
        if (k < 1) throw std::invalid_argument("row letter index must be >= 1");
        Letter a;
        a.kind = LetterKind::row;
        a.index = k;
        return a;
    }
    static Letter Col(int k) {
        if (k < 1) throw std::invalid_argument("column letter index must be >= 1");
        Letter a;
        a.kind = LetterKind::column;
        a.index = k;
        return a;
    }
    static Letter Neutral(double x) {
        if (!(x > 0.0 && x < 1.0))
            throw std::invalid_argument("neutral letter value must lie in (0,1)");
        Letter a;
        a.kind = LetterKind::neutral;
        a.value = x;
        return a;
    }

    bool operator==(const Letter& o) const {
        if (kind != o.kind) return false;
        if (kind == LetterKind::neutral) return value == o.value;
        return index == o.index;
    }
};

enum class Cmp : std::int8_t { less = -1, equal = 0, greater = 1 };

// Band of the alphabet under a given orientation: 0 = bottom block,
// 1 = neutral block, 2 = top block.
inline int band(const Letter& a, Orientation o) {
    switch (a.kind) {
    case LetterKind::neutral: return 1;
    case LetterKind::row: return o == Orientation::jdt ? 0 : 2;
    case LetterKind::column: return o == Orientation::jdt ? 2 : 0;
    }
    return 1;
}

// Total order on the alphabet.  In the bottom block indices increase upward,
// in the top block they decrease (... < 3rd < 2nd < 1st).
inline Cmp compare(const Letter& a, const Letter& b, Orientation o) {
    const int ba = band(a, o), bb = band(b, o);
    if (ba != bb) return ba < bb ? Cmp::less : Cmp::greater;
    if (a.kind == LetterKind::neutral) {
        if (a.value < b.value) return Cmp::less;
        if (a.value > b.value) return Cmp::greater;
        return Cmp::equal;
    }
    // same band, same kind
    int ka = a.index, kb = b.index;
    if (ba == 2) { ka = -ka; kb = -kb; }
    if (ka < kb) return Cmp::less;
    if (ka > kb) return Cmp::greater;
    return Cmp::equal;
}

// a <_r b : a < b, or a == b and a may repeat within a row.
// Undefined for a pair of equal neutral letters.
inline bool less_r(const Letter& a, const Letter& b, Orientation o) {
    const Cmp c = compare(a, b, o);
    if (c != Cmp::equal) return c == Cmp::less;
    if (a.kind == LetterKind::neutral)
        throw std::domain_error("less_r is undefined for an equal pair of neutral letters");
    return a.kind == LetterKind::row;
}

// a <_c b : a < b, or a == b and a may repeat within a column.
inline bool less_c(const Letter& a, const Letter& b, Orientation o) {
    const Cmp c = compare(a, b, o);
    if (c != Cmp::equal) return c == Cmp::less;
    if (a.kind == LetterKind::neutral)
        throw std::domain_error("less_c is undefined for an equal pair of neutral letters");
    return a.kind == LetterKind::column;
}

// Anti-isomorphism between the two orientations: fixes row/column identity,
// reflects neutral values.  The result is meant to be read under the opposite
// orientation.
inline Letter phi(const Letter& a) {
    if (a.kind == LetterKind::neutral) return Letter::Neutral(1.0 - a.value);
    return a;
}

inline Orientation opposite(Orientation o) {
    return o == Orientation::jdt ? Orientation::insertion : Orientation::jdt;
}

std::string to_string(const Letter& a);
Letter parse_letter(const std::string& token);

}  // namespace ytab
