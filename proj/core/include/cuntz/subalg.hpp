#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

// The subalgebra A = (+)_j e_j F_n e_j, given by k diagonal blocks. Blocks are
// word sets; validity (disjointness and partition of unity) is checked by
// validate_spec, not at construction, so that violations can be reported.
struct AlgebraSpec {
    Alphabet alphabet;
    std::vector<std::vector<Word>> blocks;

    std::size_t block_count() const { return blocks.size(); }

    // Trace of block j as a word sum; meaningful for prefix-free blocks.
    Rational block_trace(std::size_t j) const;
};

struct SpecValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks that every block is nonempty and prefix-free, that the union of all
// blocks is prefix-free, and that the traces sum to 1 (so sum e_j = 1).
SpecValidation validate_spec(const AlgebraSpec& spec);

// The spec rewritten with all words of one common length N, blocks internally
// sorted, and cumulative counts m_0 = 0 < m_1 < ... < m_k delimiting blocks.
class UniformSpec {
public:
    UniformSpec(Alphabet alphabet, int level, std::vector<Word> words,
                std::vector<std::size_t> counts);

    Alphabet alphabet() const { return alphabet_; }
    int level() const { return level_; }
    std::size_t block_count() const { return counts_.size() - 1; }
    std::size_t total_words() const { return words_.size(); }

    const std::vector<Word>& words() const { return words_; }
    const std::vector<std::size_t>& counts() const { return counts_; }

    std::size_t block_begin(std::size_t j) const { return counts_[j]; }
    std::size_t block_end(std::size_t j) const { return counts_[j + 1]; }
    std::size_t block_size(std::size_t j) const { return counts_[j + 1] - counts_[j]; }
    std::span<const Word> block_words(std::size_t j) const;

    Element block_projection(std::size_t j) const;
    Rational block_trace(std::size_t j) const;

private:
    Alphabet alphabet_;
    int level_;
    std::vector<Word> words_;
    std::vector<std::size_t> counts_;
};

// Expands a valid spec to the maximal word length present (or to min_level if
// larger). Block traces are preserved. Throws on an invalid spec.
UniformSpec uniformize(const AlgebraSpec& spec, int min_level = 0);

// The unique m with r == n^m, if any. Wrapper kept under its domain name.
inline std::optional<int> ratio_power_of_n(const Rational& r, int n) {
    return integer_log(r, n);
}

// Partition of the blocks under e_i ~ e_j iff tau(e_i)/tau(e_j) is an integer
// power of n.
struct EquivClasses {
    std::vector<std::size_t> class_of;               // block index -> class id
    std::vector<std::vector<std::size_t>> classes;   // class id -> sorted block indices
};

EquivClasses equivalence_classes(const AlgebraSpec& spec);

// A permutation of the k blocks; images are stored 0-based.
struct PermSpec {
    std::vector<std::size_t> images;

    static PermSpec identity(std::size_t k);

    std::size_t size() const { return images.size(); }
    std::size_t apply(std::size_t j) const { return images[j]; }
    bool is_identity() const;
    bool is_bijection() const;

    PermSpec inverse() const;
    // (a * b)(j) = a(b(j))
    friend PermSpec operator*(const PermSpec& a, const PermSpec& b);

    bool operator==(const PermSpec&) const = default;
};

// True iff sigma maps every equivalence class onto itself.
// Throws when sigma is not a bijection of the right size.
bool is_admissible(const AlgebraSpec& spec, const PermSpec& sigma);

// Order of S_~, i.e. the product of the class factorials.
Integer s_sim_order(const EquivClasses& classes);

// All admissible permutations in a deterministic order. Throws
// std::length_error when the group order exceeds the limit.
std::vector<PermSpec> enumerate_S_sim(const AlgebraSpec& spec, std::size_t limit);

// The canonical unitary u in the core with u e_j u^* = f_j for every j, built
// from order-preserving pairings of the blocks' level-N words. Requires equal
// block counts and matching traces.
Element build_conjugator(const AlgebraSpec& a, const AlgebraSpec& b);

}  // namespace cuntz
