#pragma once

#include <string>
#include <vector>

#include "ytab/letter.hpp"

namespace ytab {

// Finite sequence of letters read under a fixed orientation.  Neutral values
// must not repeat.
struct Word {
    std::vector<Letter> letters;
    Orientation orientation = Orientation::jdt;

    Word() = default;
    Word(std::vector<Letter> ls, Orientation o) : letters(std::move(ls)), orientation(o) {}

    std::size_t size() const { return letters.size(); }

    // Empty string when valid.
    std::string validation_error() const;
    void require_valid() const;

    // phi applied letterwise in reversed order, read under the opposite
    // orientation.
    Word reversed_phi() const;

    // Whitespace-separated letter tokens, e.g. "R1 N0.25 C2".
    static Word parse(const std::string& text, Orientation o);
    std::string to_string() const;
};

}  // namespace ytab
