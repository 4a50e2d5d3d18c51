#include "ytab/pitman.hpp"

#include <stdexcept>

#include "ytab/rsk.hpp"

namespace ytab {

namespace {

void require_row_word(const Word& w, int dimension) {
    if (dimension < 1) throw std::invalid_argument("walk dimension must be >= 1");
    for (const Letter& a : w.letters)
        if (a.kind != LetterKind::row || a.index > dimension)
            throw std::invalid_argument("word must consist of row letters R1..R" +
                                        std::to_string(dimension));
}

}  // namespace

LatticeWalk word_to_walk(const Word& w, int dimension) {
    require_row_word(w, dimension);
    LatticeWalk walk;
    walk.dimension = dimension;
    std::vector<int> pos(static_cast<size_t>(dimension), 0);
    for (const Letter& a : w.letters) {
        walk.steps.push_back(a.index);
        pos[static_cast<size_t>(a.index - 1)]++;
        walk.positions.push_back(pos);
    }
    return walk;
}

std::vector<std::vector<int>> pitman_transform(const Word& w, int dimension) {
    require_row_word(w, dimension);
    std::vector<std::vector<int>> out;
    out.reserve(w.size() + 1);
    out.emplace_back(static_cast<size_t>(dimension), 0);
    RskState st(w.orientation);
    for (const Letter& a : w.letters) {
        st.push(a);
        const YoungDiagram d = st.shape();
        if (static_cast<int>(d.rows.size()) > dimension)
            throw std::logic_error("pitman_transform: shape exceeded the walk dimension");
        std::vector<int> lam(static_cast<size_t>(dimension), 0);
        for (size_t i = 0; i < d.rows.size(); ++i) lam[i] = d.rows[i];
        out.push_back(std::move(lam));
    }
    return out;
}

}  // namespace ytab
