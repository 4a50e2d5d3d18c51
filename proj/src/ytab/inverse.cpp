#include "ytab/inverse.hpp"

#include <stdexcept>

namespace ytab {

std::vector<PsiValue> invert_prefix(const StandardTableau& t, int k, int min_prefix) {
    const int n = static_cast<int>(t.box_count());
    if (k < 0 || k > n - min_prefix)
        throw std::invalid_argument("invert_prefix: prefix too short for requested letter count");
    std::vector<PsiValue> out;
    out.reserve(static_cast<size_t>(k));
    StandardTableau cur = t;
    for (int i = 0; i < k; ++i) {
        out.push_back(classify_path(lazy_path(cur), min_prefix));
        cur = jdt_transform(cur);
    }
    return out;
}

}  // namespace ytab
