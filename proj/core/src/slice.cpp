#include "cuntz/slice.hpp"

#include <stdexcept>

namespace cuntz {

namespace {

std::size_t level_dimension(Alphabet a, int level) {
    std::size_t dim = 1;
    for (int i = 0; i < level; ++i) dim *= static_cast<std::size_t>(a.size());
    return dim;
}

}  // namespace

std::map<int, SliceMatrix> slice_matrix(const Element& x, int level) {
    if (level < 0 || static_cast<std::size_t>(level) < x.max_beta_length())
        throw std::invalid_argument("slice_matrix: level below a beta length of the element");

    const Alphabet a = x.alphabet();
    std::map<int, SliceMatrix> out;
    for (const auto& [m, c] : x.terms()) {
        const int d = m.degree();
        auto it = out.find(d);
        if (it == out.end()) {
            SliceMatrix mat;
            mat.cols = level_dimension(a, level);
            mat.rows = level_dimension(a, level + d);
            it = out.emplace(d, std::move(mat)).first;
        }
        // Columns indexed by basis words w = beta + t; the image row is
        // alpha + t.
        const int k = level - static_cast<int>(m.beta.length());
        for (const Word& t : all_words(k, a)) {
            std::size_t col = word_index(m.beta + t, a);
            std::size_t row = word_index(m.alpha + t, a);
            auto& entry = it->second.entries[{row, col}];
            entry += c;
            if (entry.is_zero()) it->second.entries.erase({row, col});
        }
    }
    // Fully cancelled degrees are dropped so representation differences do not
    // leak into comparisons.
    for (auto it = out.begin(); it != out.end();)
        it = it->second.entries.empty() ? out.erase(it) : std::next(it);
    return out;
}

bool slices_agree(const Element& x, const Element& y, int level) {
    if (x.alphabet() != y.alphabet())
        throw std::invalid_argument("slices_agree: elements belong to different alphabets");
    return slice_matrix(x, level) == slice_matrix(y, level);
}

}  // namespace cuntz
