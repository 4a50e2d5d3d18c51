#include "ytab/greene.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ytab {

namespace {

// Exhaustive search over every way of routing a subsequence of the word into
// at most k piles, memoized on (position, sorted pile tops).  Letters are
// re-encoded as indices into the word's distinct-letter list so a state
// packs into 64 bits (4 bits per pile top, piles sorted ascending).  States
// live in a flat sorted vector; this loop dominates the exhaustive corpus
// runs, so no hashing.
class DecompositionSearch {
public:
    DecompositionSearch(const std::vector<std::vector<bool>>& accepts,
                        const std::vector<int>& codes)
        : accepts_(accepts), codes_(codes) {}

    // Maximal number of letters decomposable into at most k chainable piles.
    int max_union(int k) const {
        const int n = static_cast<int>(codes_.size());
        using Entry = std::pair<std::uint64_t, int>;  // packed tops -> best count
        std::vector<Entry> states{{kEmptyState, 0}};
        std::vector<Entry> scratch;
        std::array<std::uint8_t, 16> tops{};
        for (int pos = 0; pos < n; ++pos) {
            const std::uint8_t code = static_cast<std::uint8_t>(codes_[static_cast<size_t>(pos)]);
            scratch = states;  // skipping the letter is always allowed
            for (const auto& [packed, count] : states) {
                int len = 0;
                for (std::uint64_t rest = packed; (rest & 0xf) != 0xf && len < 16; rest >>= 4)
                    tops[static_cast<size_t>(len++)] = static_cast<std::uint8_t>(rest & 0xf);
                // open a new pile
                if (len < k) scratch.emplace_back(insert_top(packed, len, code), count + 1);
                // or drop the letter on an existing pile with a compatible top
                for (int p = 0; p < len; ++p) {
                    if (p > 0 && tops[static_cast<size_t>(p)] == tops[static_cast<size_t>(p - 1)])
                        continue;
                    if (accepts_[tops[static_cast<size_t>(p)]][code])
                        scratch.emplace_back(replace_top(packed, len, p, code), count + 1);
                }
            }
            std::sort(scratch.begin(), scratch.end());
            states.clear();
            for (const Entry& e : scratch) {
                if (!states.empty() && states.back().first == e.first) {
                    if (e.second > states.back().second) states.back().second = e.second;
                } else {
                    states.push_back(e);
                }
            }
        }
        int best = 0;
        for (const auto& [packed, count] : states) best = std::max(best, count);
        return best;
    }

private:
    static constexpr std::uint64_t kEmptyState = 0xffffffffffffffffull;

    // Insert code into the sorted nibble list of length len.
    static std::uint64_t insert_top(std::uint64_t packed, int len, std::uint8_t code) {
        int slot = 0;
        while (slot < len && ((packed >> (4 * slot)) & 0xf) < code) ++slot;
        const std::uint64_t low_mask = (slot == 0) ? 0 : (~0ull >> (64 - 4 * slot));
        const std::uint64_t low = packed & low_mask;
        const std::uint64_t high = (packed & ~low_mask) << 4;
        return high | (static_cast<std::uint64_t>(code) << (4 * slot)) | low;
    }

    // Replace the nibble at position p with code, keeping the list sorted:
    // drop nibble p (restoring the 0xf sentinel at the top), then reinsert.
    static std::uint64_t replace_top(std::uint64_t packed, int len, int p, std::uint8_t code) {
        const std::uint64_t low_mask = (p == 0) ? 0 : (~0ull >> (64 - 4 * p));
        const std::uint64_t without =
            ((packed >> 4) & ~low_mask) | (packed & low_mask) | (0xfull << 60);
        return insert_top(without, len - 1, code);
    }

    const std::vector<std::vector<bool>>& accepts_;
    const std::vector<int>& codes_;
};

std::vector<int> rows_from_decompositions(const DecompositionSearch& search, int n) {
    std::vector<int> rows;
    int prev = 0;
    for (int k = 1; k <= n && prev < n; ++k) {
        const int cur = search.max_union(k);
        if (cur == prev) break;
        rows.push_back(cur - prev);
        prev = cur;
    }
    return rows;
}

}  // namespace

YoungDiagram greene_oracle(const Word& w, int bound) {
    w.require_valid();
    const int n = static_cast<int>(w.size());
    if (n > bound) throw std::invalid_argument("greene_oracle: oracle bound exceeded");
    if (n == 0) return YoungDiagram{};
    if (n > 15) throw std::invalid_argument("greene_oracle: state encoding supports at most 15 letters");

    // distinct-letter codes
    std::vector<Letter> distinct;
    std::vector<int> codes;
    for (const Letter& a : w.letters) {
        auto it = std::find(distinct.begin(), distinct.end(), a);
        if (it == distinct.end()) {
            distinct.push_back(a);
            codes.push_back(static_cast<int>(distinct.size()) - 1);
        } else {
            codes.push_back(static_cast<int>(it - distinct.begin()));
        }
    }

    const Orientation o = w.orientation;
    const size_t d = distinct.size();
    std::vector<std::vector<bool>> accepts_r(d, std::vector<bool>(d)),
        accepts_c(d, std::vector<bool>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            // a pile for the row reading is a <_r-increasing subsequence; for
            // the column reading it is <_c-decreasing
            const bool equal_neutral = i == j && distinct[i].kind == LetterKind::neutral;
            accepts_r[i][j] = !equal_neutral && less_r(distinct[i], distinct[j], o);
            accepts_c[i][j] = !equal_neutral && less_c(distinct[j], distinct[i], o);
        }

    DecompositionSearch row_search(accepts_r, codes);
    DecompositionSearch col_search(accepts_c, codes);
    const std::vector<int> rows = rows_from_decompositions(row_search, n);
    const std::vector<int> cols = rows_from_decompositions(col_search, n);

    YoungDiagram lambda{rows};
    if (!lambda.valid() || lambda.conjugate() != cols)
        throw std::runtime_error("greene_oracle: row and column decompositions disagree");
    return lambda;
}

}  // namespace ytab
