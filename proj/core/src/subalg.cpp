#include "cuntz/subalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cuntz {

Rational AlgebraSpec::block_trace(std::size_t j) const {
    Rational sum = 0;
    for (const Word& w : blocks.at(j))
        sum += rational_pow(alphabet.size(), -static_cast<int>(w.length()));
    return sum;
}

SpecValidation validate_spec(const AlgebraSpec& spec) {
    SpecValidation v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.violations.push_back(std::move(msg));
    };

    if (spec.blocks.empty()) fail("spec has no blocks (k must be >= 1)");
    std::vector<Word> all;
    for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
        const auto& block = spec.blocks[j];
        if (block.empty()) {
            fail("block " + std::to_string(j + 1) + " is empty");
            continue;
        }
        for (const Word& w : block) {
            if (!w.valid_for(spec.alphabet))
                fail("block " + std::to_string(j + 1) + ": word " + w.str() +
                     " has a letter outside 1.." + std::to_string(spec.alphabet.size()));
            all.push_back(w);
        }
    }
    if (!v.ok) return v;

    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail("blocks share a word");
    auto report = validate_prefix_code(all, spec.alphabet);
    if (!report.prefix_free)
        fail("the union of the blocks is not prefix-free");
    if (report.kraft_sum != 1)
        fail("block traces sum to " + to_string(report.kraft_sum) +
             ", not 1 (the e_j do not partition the identity)");
    return v;
}

UniformSpec::UniformSpec(Alphabet alphabet, int level, std::vector<Word> words,
                         std::vector<std::size_t> counts)
    : alphabet_(alphabet), level_(level), words_(std::move(words)), counts_(std::move(counts)) {
    if (counts_.size() < 2 || counts_.front() != 0 || counts_.back() != words_.size())
        throw std::invalid_argument("UniformSpec: malformed block counts");
    std::set<Word> seen;
    for (const Word& w : words_) {
        if (static_cast<int>(w.length()) != level_)
            throw std::invalid_argument("UniformSpec: word of the wrong length");
        if (!seen.insert(w).second)
            throw std::invalid_argument("UniformSpec: duplicate word");
    }
    std::size_t expected = 1;
    for (int i = 0; i < level_; ++i) expected *= static_cast<std::size_t>(alphabet_.size());
    if (words_.size() != expected)
        throw std::invalid_argument("UniformSpec: words do not exhaust level " +
                                    std::to_string(level_));
    for (std::size_t j = 0; j + 1 < counts_.size(); ++j) {
        if (counts_[j] >= counts_[j + 1])
            throw std::invalid_argument("UniformSpec: empty block");
        if (!std::is_sorted(words_.begin() + static_cast<std::ptrdiff_t>(counts_[j]),
                            words_.begin() + static_cast<std::ptrdiff_t>(counts_[j + 1])))
            throw std::invalid_argument("UniformSpec: block words not sorted");
    }
}

std::span<const Word> UniformSpec::block_words(std::size_t j) const {
    return {words_.data() + block_begin(j), block_size(j)};
}

Element UniformSpec::block_projection(std::size_t j) const {
    Element e(alphabet_);
    for (const Word& w : block_words(j)) e.add_term({w, w}, Scalar(1));
    return e;
}

Rational UniformSpec::block_trace(std::size_t j) const {
    return Rational(static_cast<long>(block_size(j))) * rational_pow(alphabet_.size(), -level_);
}

UniformSpec uniformize(const AlgebraSpec& spec, int min_level) {
    auto v = validate_spec(spec);
    if (!v.ok) {
        std::ostringstream os;
        os << "uniformize: invalid spec";
        for (const auto& m : v.violations) os << "; " << m;
        throw std::invalid_argument(os.str());
    }
    std::size_t level = static_cast<std::size_t>(std::max(min_level, 0));
    for (const auto& block : spec.blocks)
        for (const Word& w : block) level = std::max(level, w.length());

    std::vector<Word> words;
    std::vector<std::size_t> counts{0};
    for (const auto& block : spec.blocks) {
        std::vector<Word> expanded;
        for (const Word& w : block) {
            auto ext = expand_word(w, static_cast<int>(level - w.length()), spec.alphabet);
            expanded.insert(expanded.end(), ext.begin(), ext.end());
        }
        std::sort(expanded.begin(), expanded.end());
        words.insert(words.end(), expanded.begin(), expanded.end());
        counts.push_back(words.size());
    }
    return UniformSpec(spec.alphabet, static_cast<int>(level), std::move(words),
                       std::move(counts));
}

EquivClasses equivalence_classes(const AlgebraSpec& spec) {
    auto v = validate_spec(spec);
    if (!v.ok) throw std::invalid_argument("equivalence_classes: invalid spec");

    const std::size_t k = spec.block_count();
    std::vector<Rational> traces(k);
    for (std::size_t j = 0; j < k; ++j) traces[j] = spec.block_trace(j);

    EquivClasses out;
    out.class_of.assign(k, k);  // k = unassigned
    for (std::size_t i = 0; i < k; ++i) {
        if (out.class_of[i] != k) continue;
        std::size_t id = out.classes.size();
        out.classes.push_back({i});
        out.class_of[i] = id;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (out.class_of[j] != k) continue;
            if (ratio_power_of_n(traces[i] / traces[j], spec.alphabet.size())) {
                out.classes[id].push_back(j);
                out.class_of[j] = id;
            }
        }
    }
    return out;
}

PermSpec PermSpec::identity(std::size_t k) {
    PermSpec p;
    p.images.resize(k);
    std::iota(p.images.begin(), p.images.end(), std::size_t{0});
    return p;
}

bool PermSpec::is_identity() const {
    for (std::size_t j = 0; j < images.size(); ++j)
        if (images[j] != j) return false;
    return true;
}

bool PermSpec::is_bijection() const {
    std::vector<bool> hit(images.size(), false);
    for (std::size_t v : images) {
        if (v >= images.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

PermSpec PermSpec::inverse() const {
    PermSpec out;
    out.images.resize(images.size());
    for (std::size_t j = 0; j < images.size(); ++j) out.images[images[j]] = j;
    return out;
}

PermSpec operator*(const PermSpec& a, const PermSpec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("PermSpec: size mismatch in composition");
    PermSpec out;
    out.images.resize(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out.images[j] = a.apply(b.apply(j));
    return out;
}

bool is_admissible(const AlgebraSpec& spec, const PermSpec& sigma) {
    if (sigma.size() != spec.block_count() || !sigma.is_bijection())
        throw std::invalid_argument("is_admissible: sigma is not a permutation of the blocks");
    auto classes = equivalence_classes(spec);
    for (std::size_t j = 0; j < sigma.size(); ++j)
        if (classes.class_of[sigma.apply(j)] != classes.class_of[j]) return false;
    return true;
}

Integer s_sim_order(const EquivClasses& classes) {
    Integer order = 1;
    for (const auto& cls : classes.classes) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(cls.size()));
        order *= f;
    }
    return order;
}

std::vector<PermSpec> enumerate_S_sim(const AlgebraSpec& spec, std::size_t limit) {
    auto classes = equivalence_classes(spec);
    Integer order = s_sim_order(classes);
    if (order > static_cast<unsigned long>(limit))
        throw std::length_error("enumerate_S_sim: |S_~| = " + order.get_str() +
                                " exceeds limit " + std::to_string(limit));

    const std::size_t k = spec.block_count();
    // Per class, all arrangements of its members in lexicographic order.
    std::vector<std::vector<std::vector<std::size_t>>> arrangements;
    for (const auto& cls : classes.classes) {
        std::vector<std::size_t> arr = cls;  // sorted already
        std::vector<std::vector<std::size_t>> list;
        do {
            list.push_back(arr);
        } while (std::next_permutation(arr.begin(), arr.end()));
        arrangements.push_back(std::move(list));
    }

    // Cartesian product, last class varying fastest.
    std::vector<PermSpec> out;
    std::vector<std::size_t> pick(arrangements.size(), 0);
    for (;;) {
        PermSpec sigma;
        sigma.images.assign(k, 0);
        for (std::size_t c = 0; c < arrangements.size(); ++c) {
            const auto& members = classes.classes[c];
            const auto& target = arrangements[c][pick[c]];
            for (std::size_t t = 0; t < members.size(); ++t)
                sigma.images[members[t]] = target[t];
        }
        out.push_back(std::move(sigma));
        std::size_t c = arrangements.size();
        while (c > 0 && ++pick[c - 1] == arrangements[c - 1].size()) pick[--c] = 0;
        if (c == 0) break;
    }
    return out;
}

Element build_conjugator(const AlgebraSpec& a, const AlgebraSpec& b) {
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("build_conjugator: alphabet mismatch");
    if (a.block_count() != b.block_count())
        throw std::invalid_argument("build_conjugator: block count mismatch");
    for (std::size_t j = 0; j < a.block_count(); ++j)
        if (a.block_trace(j) != b.block_trace(j))
            throw std::invalid_argument("build_conjugator: trace mismatch at block " +
                                        std::to_string(j + 1) + " (" +
                                        to_string(a.block_trace(j)) + " vs " +
                                        to_string(b.block_trace(j)) + ")");

    UniformSpec ua = uniformize(a);
    UniformSpec ub = uniformize(b);
    const int level = std::max(ua.level(), ub.level());
    ua = uniformize(a, level);
    ub = uniformize(b, level);

    // v_j maps the level-N words of e_j onto those of f_j in sorted order;
    // u = sum v_j then conjugates each e_j onto f_j.
    Element u(a.alphabet);
    for (std::size_t j = 0; j < ua.block_count(); ++j) {
        auto from = ua.block_words(j);
        auto to = ub.block_words(j);
        for (std::size_t i = 0; i < from.size(); ++i)
            u.add_term({to[i], from[i]}, Scalar(1));
    }
    return u;
}

}  // namespace cuntz
