#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "cuntz/algebra.hpp"

namespace cuntz {

// Sparse exact matrix of the action e_w -> [beta prefix of w] e_{alpha (w\beta)}
// on the span of fixed-length words. Zero entries are never stored.
struct SliceMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries;

    bool operator==(const SliceMatrix&) const = default;
};

// Per gauge degree d, the matrix from the level-M word basis to the
// level-(M+d) word basis. Requires M >= |beta| for every term. Degrees whose
// matrix cancels to zero are omitted.
//
// This is the independent equality oracle: it never goes through
// expand/collapse, only through the prefix action on basis words.
std::map<int, SliceMatrix> slice_matrix(const Element& x, int level);

// Whether x and y act identically on the level-M word basis, degree by degree.
bool slices_agree(const Element& x, const Element& y, int level);

}  // namespace cuntz
