#include "ytab/letter.hpp"

#include <charconv>
#include <cstdio>

namespace ytab {

std::string to_string(const Letter& a) {
    char buf[40];
    switch (a.kind) {
    case LetterKind::row:
        std::snprintf(buf, sizeof buf, "R%d", a.index);
        break;
    case LetterKind::column:
        std::snprintf(buf, sizeof buf, "C%d", a.index);
        break;
    case LetterKind::neutral:
        std::snprintf(buf, sizeof buf, "N%.17g", a.value);
        break;
    }
    return buf;
}

Letter parse_letter(const std::string& token) {
    if (token.size() < 2)
        throw std::invalid_argument("cannot parse letter: '" + token + "'");
    const char tag = token[0];
    const std::string rest = token.substr(1);
    try {
        if (tag == 'R' || tag == 'C') {
            size_t pos = 0;
            const int k = std::stoi(rest, &pos);
            if (pos != rest.size()) throw std::invalid_argument("trailing characters");
            return tag == 'R' ? Letter::Row(k) : Letter::Col(k);
        }
        if (tag == 'N') {
            size_t pos = 0;
            const double x = std::stod(rest, &pos);
            if (pos != rest.size()) throw std::invalid_argument("trailing characters");
            return Letter::Neutral(x);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse letter: '" + token + "'");
    }
    throw std::invalid_argument("cannot parse letter: '" + token + "'");
}

}  // namespace ytab
