#include "ytab/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ytab {

std::string Word::validation_error() const {
    std::vector<double> neutrals;
    for (const Letter& a : letters)
        if (a.kind == LetterKind::neutral) neutrals.push_back(a.value);
    std::sort(neutrals.begin(), neutrals.end());
    if (std::adjacent_find(neutrals.begin(), neutrals.end()) != neutrals.end())
        return "neutral letter value repeats within the word";
    return {};
}

void Word::require_valid() const {
    const std::string e = validation_error();
    if (!e.empty()) throw std::invalid_argument("invalid word: " + e);
}

Word Word::reversed_phi() const {
    Word out;
    out.orientation = opposite(orientation);
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(phi(*it));
    return out;
}

Word Word::parse(const std::string& text, Orientation o) {
    Word w;
    w.orientation = o;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) w.letters.push_back(parse_letter(tok));
    return w;
}

std::string Word::to_string() const {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        out += ytab::to_string(letters[i]);
    }
    return out;
}

}  // namespace ytab
