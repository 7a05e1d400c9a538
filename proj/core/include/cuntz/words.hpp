#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cuntz/rational.hpp"

namespace cuntz {

// Number of generators S_1..S_n. Always n >= 2.
class Alphabet {
public:
    explicit Alphabet(int n);

    int size() const { return n_; }

    friend bool operator==(Alphabet a, Alphabet b) { return a.n_ == b.n_; }
    friend bool operator!=(Alphabet a, Alphabet b) { return a.n_ != b.n_; }

private:
    int n_;
};

// A finite word over {1..n}. The empty word is a regular value (it indexes
// the identity monomial). Letters are 1-based.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters) : letters_(letters) {}
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }

    int back() const { return letters_.back(); }

    // Concatenation.
    Word operator+(const Word& tail) const;

    // The word without its last letter. Requires a nonempty word.
    Word parent() const;

    // True when this word is a (not necessarily proper) prefix of w.
    bool is_prefix_of(const Word& w) const;

    bool valid_for(Alphabet a) const;

    // Shortlex: shorter words come first, equal lengths compare letterwise.
    // This refines the letterwise order used between equal-length words and
    // makes every word list sortable.
    std::strong_ordering operator<=>(const Word& other) const;
    bool operator==(const Word& other) const = default;

    // Rendering as "[1,2,1]"; the empty word is "[]".
    std::string str() const;

private:
    std::vector<int> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

enum class Ordering { LT, EQ, GT };

// Shortlex comparison with letter validation against the alphabet.
// Throws std::invalid_argument when a letter is out of range.
Ordering lex_compare(const Word& a, const Word& b, Alphabet alphabet);

struct PrefixSplit {
    enum class Kind { Equal, AIsPrefix, BIsPrefix, Disjoint };
    Kind kind = Kind::Disjoint;
    Word residual;  // nonempty only for the two proper-prefix cases

    bool operator==(const PrefixSplit&) const = default;
};

// Decides how two words overlap as prefixes of each other.
// a being a proper prefix of b yields AIsPrefix with b = a + residual.
PrefixSplit prefix_split(const Word& a, const Word& b);

// All n^m words w + nu with |nu| = m, sorted ascending. m = 0 gives {w}.
std::vector<Word> expand_word(const Word& w, int m, Alphabet alphabet);

// All words of a given length, sorted ascending.
std::vector<Word> all_words(int length, Alphabet alphabet);

// Position of w in the sorted list of all words of length |w|.
std::size_t word_index(const Word& w, Alphabet alphabet);

struct PrefixCodeReport {
    bool prefix_free = false;
    Rational kraft_sum;  // sum of n^-|mu| over the distinct words
    bool complete = false;  // prefix_free and kraft_sum == 1, i.e. sum P_mu = 1

    bool operator==(const PrefixCodeReport&) const = default;
};

// Kraft data of a word set. Input order does not matter; duplicates count once.
PrefixCodeReport validate_prefix_code(const std::vector<Word>& words, Alphabet alphabet);

// A prefix-free word set, i.e. a projection sum P_{mu_1} + ... + P_{mu_r}
// in the diagonal MASA. Words are kept sorted and distinct; construction
// rejects sets where one word is a proper prefix of another.
class DiagonalProjection {
public:
    DiagonalProjection(Alphabet alphabet, std::vector<Word> words);

    Alphabet alphabet() const { return alphabet_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    std::size_t max_length() const;

    // Trace sum n^-|mu| (always <= 1 for a prefix code).
    Rational trace() const;

    // All length-level words lying under the projection, sorted.
    // Requires level >= max_length().
    std::vector<Word> expand_to(int level) const;

private:
    Alphabet alphabet_;
    std::vector<Word> words_;
};

}  // namespace cuntz
