#include "cuntz/words.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cuntz {

Alphabet::Alphabet(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("Alphabet: n must be >= 2");
}

Word Word::operator+(const Word& tail) const {
    std::vector<int> out;
    out.reserve(letters_.size() + tail.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
    return Word(std::move(out));
}

Word Word::parent() const {
    if (letters_.empty()) throw std::logic_error("Word::parent: empty word");
    return Word(std::vector<int>(letters_.begin(), letters_.end() - 1));
}

bool Word::is_prefix_of(const Word& w) const {
    if (length() > w.length()) return false;
    return std::equal(letters_.begin(), letters_.end(), w.letters_.begin());
}

bool Word::valid_for(Alphabet a) const {
    for (int c : letters_)
        if (c < 1 || c > a.size()) return false;
    return true;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = length() <=> other.length(); c != 0) return c;
    for (std::size_t i = 0; i < length(); ++i)
        if (auto c = letters_[i] <=> other.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Word::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ',';
        os << letters_[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.str();
}

Ordering lex_compare(const Word& a, const Word& b, Alphabet alphabet) {
    if (!a.valid_for(alphabet) || !b.valid_for(alphabet))
        throw std::invalid_argument("lex_compare: letter out of range for alphabet");
    auto c = a <=> b;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

PrefixSplit prefix_split(const Word& a, const Word& b) {
    if (a == b) return {PrefixSplit::Kind::Equal, Word{}};
    if (a.is_prefix_of(b)) {
        std::vector<int> r(b.letters().begin() + static_cast<std::ptrdiff_t>(a.length()),
                           b.letters().end());
        return {PrefixSplit::Kind::AIsPrefix, Word(std::move(r))};
    }
    if (b.is_prefix_of(a)) {
        std::vector<int> r(a.letters().begin() + static_cast<std::ptrdiff_t>(b.length()),
                           a.letters().end());
        return {PrefixSplit::Kind::BIsPrefix, Word(std::move(r))};
    }
    return {PrefixSplit::Kind::Disjoint, Word{}};
}

std::vector<Word> expand_word(const Word& w, int m, Alphabet alphabet) {
    if (m < 0) throw std::invalid_argument("expand_word: m must be >= 0");
    if (!w.valid_for(alphabet))
        throw std::invalid_argument("expand_word: letter out of range for alphabet");
    std::vector<Word> out;
    // Odometer over suffixes, emitting concatenations in ascending order.
    std::vector<int> suffix(static_cast<std::size_t>(m), 1);
    for (;;) {
        std::vector<int> letters = w.letters();
        letters.insert(letters.end(), suffix.begin(), suffix.end());
        out.push_back(Word(std::move(letters)));
        int pos = m - 1;
        while (pos >= 0 && suffix[static_cast<std::size_t>(pos)] == alphabet.size()) {
            suffix[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++suffix[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::vector<Word> all_words(int length, Alphabet alphabet) {
    return expand_word(Word{}, length, alphabet);
}

std::size_t word_index(const Word& w, Alphabet alphabet) {
    if (!w.valid_for(alphabet))
        throw std::invalid_argument("word_index: letter out of range for alphabet");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < w.length(); ++i)
        idx = idx * static_cast<std::size_t>(alphabet.size()) +
              static_cast<std::size_t>(w[i] - 1);
    return idx;
}

PrefixCodeReport validate_prefix_code(const std::vector<Word>& words, Alphabet alphabet) {
    std::vector<Word> sorted = words;
    for (const Word& w : sorted)
        if (!w.valid_for(alphabet))
            throw std::invalid_argument("validate_prefix_code: letter out of range");
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    PrefixCodeReport report;
    report.prefix_free = true;
    report.kraft_sum = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        report.kraft_sum += rational_pow(alphabet.size(), -static_cast<int>(sorted[i].length()));
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (sorted[i].is_prefix_of(sorted[j])) report.prefix_free = false;
    }
    report.complete = report.prefix_free && report.kraft_sum == 1;
    return report;
}

DiagonalProjection::DiagonalProjection(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(alphabet), words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    auto report = validate_prefix_code(words_, alphabet_);
    if (!report.prefix_free)
        throw std::invalid_argument("DiagonalProjection: word set is not prefix-free");
}

std::size_t DiagonalProjection::max_length() const {
    std::size_t m = 0;
    for (const Word& w : words_) m = std::max(m, w.length());
    return m;
}

Rational DiagonalProjection::trace() const {
    Rational sum = 0;
    for (const Word& w : words_)
        sum += rational_pow(alphabet_.size(), -static_cast<int>(w.length()));
    return sum;
}

std::vector<Word> DiagonalProjection::expand_to(int level) const {
    if (level < 0 || static_cast<std::size_t>(level) < max_length())
        throw std::invalid_argument("DiagonalProjection::expand_to: level below max word length");
    std::vector<Word> out;
    for (const Word& w : words_) {
        auto ext = expand_word(w, level - static_cast<int>(w.length()), alphabet_);
        out.insert(out.end(), ext.begin(), ext.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cuntz
